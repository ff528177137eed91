"""Flag manifolds are simple; EL(3) and wide split algebras are not homogeneous spaces."""

from waci import QuotientAlgebra, SplitParams, eisenbud_levine, flag_presentation, is_simple, pi1, split_family
from waci.families import nonhomogeneity_check, weyl_table

if __name__ == "__main__":
    flag = flag_presentation(2)
    print(flag)
    print("  simple", is_simple(flag).verdict, " dim", QuotientAlgebra(flag).total_dim(), " pi_1", pi1(flag))
    for t, (degs, dim) in weyl_table().items():
        print(f"  {t:3} degrees {degs} dim {dim}")
    for p in (eisenbud_levine(3), split_family(SplitParams(4, 1, (2,) * 4, (2,) * 4)), flag):
        v = nonhomogeneity_check(p)
        print(f"{p.label or p}: {v.verdict} ({v.reason})")
