"""Print the Q8 brace and the automorphisms of Q8 that preserve it."""
from __future__ import annotations

import numpy as np

from skewbrace.brace import is_brace_automorphism, kernel, socle
from skewbrace.constructors import q8_brace, q8_equivariant_automorphisms
from skewbrace.groups import automorphisms


def main() -> None:
    B = q8_brace()
    L = B.labels
    print("addition table")
    for i in range(B.order):
        print("  " + " ".join(f"{L[B.plus(i, j)]:>3}" for j in range(B.order)))
    print(f"kernel: {[L[x] for x in kernel(B)]}  socle: {[L[x] for x in socle(B)]}")
    auts = automorphisms(B.mul)
    keep = [m for m in auts if is_brace_automorphism(B, m.images)]
    print(f"{len(keep)} of {len(auts)} automorphisms preserve the brace")
    named = q8_equivariant_automorphisms()
    for name, m in named.items():
        p, order = m.images, 1
        while not (p == np.arange(8)).all():
            p, order = m.images[p], order + 1
        print(f"  {name}: a -> {L[m(B.mul.index('a'))]}, b -> {L[m(B.mul.index('b'))]}, order {order}")


if __name__ == "__main__":
    main()
