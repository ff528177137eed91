"""Split simple algebras: zero signature and a half-dimensional isotropic subspace."""

from waci import QuotientAlgebra, SplitParams, is_simple, pi1, split_family
from waci.duality import middle_form, orientation
from waci.families import split_hilbert, split_isotropic
from waci.quadform import signature
from waci.smoothing import smoothability_report

PARAMS = [
    SplitParams(2, 1, (2, 2), (2, 2)),
    SplitParams(3, 1, (2, 4, 2), (4, 2, 4)),
    SplitParams(2, 2, (2, 6), (6, 2)),
]

if __name__ == "__main__":
    for params in PARAMS:
        p = split_family(params)
        A = QuotientAlgebra(p)
        print(p, f"(d = {params.d})")
        print("  hilbert         ", A.hilbert())
        print("  closed form     ", split_hilbert(params) == A.hilbert())
        print("  simple          ", is_simple(p, A).verdict)
        print("  pi_1            ", pi1(p, A))
        N = split_isotropic(params, A)
        om = orientation(A)
        print("  dim A, dim N    ", A.total_dim(), len(N))
        print("  N.N = 0         ", all(om.evaluate(a * b) == 0 for a in N for b in N))
        if A.top_degree % 4 == 0:
            print("  signature       ", signature(middle_form(A)))
        print("  smoothability   ", smoothability_report(A).verdict)
        print()
