"""Walk through the Eisenbud-Levine algebras EL(3) and EL(4)."""

from waci import QuotientAlgebra, eisenbud_levine, is_simple, pi1
from waci.duality import middle_form
from waci.families import el_orientation
from waci.quadform import integrality, signature
from waci.smoothing import el_pontrjagin_class, l_value, partition_label, pontrjagin_numbers


def show(n):
    p = eisenbud_levine(n)
    A = QuotientAlgebra(p)
    print(p)
    print("  hilbert          ", A.hilbert())
    print("  simple           ", is_simple(p, A).verdict)
    print("  pi_1             ", pi1(p, A))
    omega = el_orientation(A, n)
    G = middle_form(A, omega)
    print("  orientation      ", omega.omega)
    print("  middle signature ", signature(G))
    print("  signed squares   ", integrality(G).integral)
    q = el_pontrjagin_class(A)
    nums = pontrjagin_numbers(A, q, omega)
    print("  class q          ", q)
    print("  numbers          ", {partition_label(k): str(v) for k, v in nums.items()})
    print("  <L(q), omega>    ", l_value(A, q, omega))
    print()


if __name__ == "__main__":
    for n in (3, 4):
        show(n)
