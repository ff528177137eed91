"""The integer obstruction behind invariant geodesics.

A monomial action y_j -> lambda_j y_sigma(j) has characteristic polynomial
prod (z^s_i - gamma_i).  Integrality forces every gamma_i into Z, and then
|P(0)| = |P(1)| = 1 cannot happen.
"""

from waci import eisenbud_levine, split_family, SplitParams
from waci.geodesic import (
    MonomialAction,
    char_poly,
    dense_char_poly,
    gauss_lemma_sweep,
    geodesic_report,
    unimodular_search,
)

if __name__ == "__main__":
    act = MonomialAction((1, 2, 0, 3), (2, 3, 1, -1))
    c = char_poly(act)
    print("cycles", act.cycles(), "gammas", [str(g) for g in c.gammas])
    print("P coefficients", [str(x) for x in c.coefficients], "dense", c.coefficients == dense_char_poly(act.matrix()))
    print("P(0) =", c.at_zero, " P(1) =", c.at_one)
    cases, alarms = gauss_lemma_sweep()
    print(f"Gauss lemma sweep: {cases} cases, {alarms} alarms")
    r = unimodular_search(4, 10, max_cycle_length=2, prune=False)
    print(f"unimodular search: examined {r.examined}, found {r.found}")
    rep = geodesic_report([eisenbud_levine(3), split_family(SplitParams(2, 1, (2, 2), (2, 2)))])
    for f in rep.factors:
        print(f"  {f.label}: {f.reason}, k = {f.k}")
    print("k =", rep.k, "critical factors", rep.critical)
    print(rep.conclusion)
