"""Signed-squares test: residues at each prime against a brute-force search."""

from waci.quadform import brute_force_signed_squares, diagonalize, integrality, relevant_primes, residue

FORMS = {
    "<2>": [[2]],
    "<2,2>": [[2, 0], [0, 2]],
    "<3,3>": [[3, 0], [0, 3]],
    "hyperbolic": [[0, 1], [1, 0]],
    "A2 lattice": [[2, -1], [-1, 2]],
}

if __name__ == "__main__":
    for name, G in FORMS.items():
        D = diagonalize(G)
        res = integrality(G)
        residues = {p: residue(D, p).entries for p in relevant_primes(D)}
        print(f"{name:11} diag {D.entries} residues {residues} -> {res.integral}"
              f" (brute force {brute_force_signed_squares(G)})")
        if res.certificate:
            print("            basis", [[str(x) for x in row] for row in res.certificate])
