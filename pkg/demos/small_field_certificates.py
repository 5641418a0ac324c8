#!/usr/bin/env python3
"""Certify generation of Sp_{2n}(2) for small n.

Over F_2 the generic argument needs two extra ingredients:

1. The union of the prime supports of the element orders of a few short
   words in x, y must equal the prime support of |Sp_{2n}(2)|.
2. When n is even, the subgroup generated by x and y must not preserve a
   quadratic form polarizing the symplectic form; this is decided by an
   exact linear solve whose outcome should be "Inconsistent".

`certify_pair` packages both steps into a single certificate.
"""

from sympgen import (
    certify_pair,
    quadratic_form_obstruction,
    build,
    varpi_group,
)


def main() -> None:
    for n in (6, 7, 8, 9, 11):
        cert = certify_pair(n, 2)
        print(f"Sp_{2*n}(2): varpi = {varpi_group('sp', n, 2)}  ->  {cert.name}")

    print()
    for n in (6, 8):
        pair = build("general", n, 2, 1)
        obs = quadratic_form_obstruction(pair)
        print(f"n={n}: quadratic-form linear system is {obs.kind}")


if __name__ == "__main__":
    main()
