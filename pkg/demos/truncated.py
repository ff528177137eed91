"""Q[x]/(x^3) with |x| = 2k: smoothable for k = 1, obstructed for odd k > 1."""

from waci import QuotientAlgebra, truncated
from waci.smoothing import cp_class, l_value, smoothability_report, truncated_divisibility

if __name__ == "__main__":
    cp2 = QuotientAlgebra(truncated(3, 2))
    q = cp_class(cp2)
    print("k = 1: class", q, "gives <L(q), omega> =", l_value(cp2, q))
    for k in (1, 3, 5):
        A = QuotientAlgebra(truncated(3, 2 * k))
        print(f"k = {k}: divisibility {truncated_divisibility(k)}; {smoothability_report(A).verdict}")
