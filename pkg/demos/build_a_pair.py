#!/usr/bin/env python3
"""Build a few (2,3)-generator pairs of Sp_{2n}(q) and inspect them.

Each recipe produces an involution x and an element y of order 3 inside
Sp_{2n}(q).  This script builds a handful of pairs, checks the defining
relations, and prints the characteristic polynomial of the commutator
[x, y] = x^{-1} y^{-1} x y, which is the workhorse object in the
verification claims.
"""

from sympgen import build, char_poly, element_order, standard_field, tau_of


def show(recipe: str, n: int, q: int, a) -> None:
    pair = build(recipe, n, q, a).validate()
    c = pair.commutator()
    print(f"recipe={recipe!r:12} n={n:2} q={q:2} a={pair.field.elem_string(pair.a.val)}")
    print(f"  x^2 = I, y^3 = I, both symplectic: OK (validate() passed)")
    print(f"  |[x,y]| = {element_order(c).value()}")
    print(f"  char_poly([x,y]) = {char_poly(c)}")
    try:
        t = tau_of(pair)
        print(f"  tau = [x,y]^k has order {element_order(t).value()}")
    except Exception:
        print("  (no tau defined for this recipe/characteristic)")
    print()


def main() -> None:
    show("general", 4, 3, 1)
    show("general", 6, 5, 1)
    show("n5", 5, 7, 1)
    show("n6alt", 6, 8, standard_field(8).mult_generator())
    show("n8alt", 8, 3, 1)


if __name__ == "__main__":
    main()
