"""For each border strip of size n, show the diagonal of the n-cycle matrix.

Each strip should have one nonzero diagonal entry, at its canonical
tableau, equal to (-1)^height.
"""

import argparse

from mnspecht import specht
from mnspecht.core import height, is_border_strip, long_cycle, skew_shapes_of
from mnspecht.tableaux import canonical_strip_tableau


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int)
    args = ap.parse_args()

    sigma = long_cycle(args.n)
    for s in skew_shapes_of(args.n):
        if not is_border_strip(s):
            continue
        basis = specht.standard_basis(s)
        diag = specht.diagonal(s, sigma)
        hits = [(str(t), d) for t, d in zip(basis, diag) if d]
        ok = hits == [(str(canonical_strip_tableau(s)), (-1) ** height(s))]
        print(f"{str(s):<16} dim={len(basis):<4} ht={height(s)} nonzero={hits} {'ok' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
