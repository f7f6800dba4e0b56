"""Recovering a curve from its points, and normalizing its X-degree.

Enough points on an irreducible degree-d curve pin it down: the kernel of
the monomial-evaluation matrix gives a degree-d form through the points,
and sharing more than d^2 zeros forces proportionality.  Separately, a
shear (X, Y) -> (X', c X' + Y') always makes the X-degree equal the total
degree.
"""

import random

from polybox import (GF, FullRankError, Poly, bivar, curve_text,
                     find_full_degree_transform, interpolate_form, poly_text,
                     proportional)
from polybox.detmethod import InterpolationProblem
from polybox.poly import random_poly

F3 = GF(3)
rng = random.Random(2)

print("== Five points on the conic Y = X^2 determine it ==")
xs = rng.sample([Poly(F3, c) for c in
                 [(i, j) for i in range(3) for j in range(3)]], 5)
pts = [(x, x * x) for x in xs]
problem = InterpolationProblem.build(pts, 2)
print(f"matrix: {len(problem.matrix)} points x {problem.n_d} monomials "
      f"(threshold r(d) = {problem.r_d})")
G = problem.solve()
conic = bivar(F3, {(0, 1): 1, (2, 0): 2})
print(f"kernel form: {curve_text(G)}")
print(f"proportional to Y - X^2: {proportional(G, conic)}")
print()

print("== Three points in general position admit no line ==")
tries = 0
while True:
    pts3 = [(random_poly(F3, 1, rng), random_poly(F3, 1, rng))
            for _ in range(3)]
    try:
        interpolate_form(pts3, 1)
        tries += 1
    except FullRankError:
        print(f"FullRankError raised after {tries} collinear draws")
        break
print()

print("== Shearing Y^d terms into X ==")
for terms, label in [({(0, 2): 1}, "Y^2"),
                     ({(1, 1): 1}, "X*Y"),
                     ({(0, 3): 1, (1, 0): 1}, "Y^3 + X")]:
    F = bivar(F3, terms)
    M, G = find_full_degree_transform(F)
    print(f"{label:9} -> substitute Y = ({poly_text(M.c)})*X' + Y'"
          f" -> {curve_text(G)}  [deg_X = {G.deg_x} = deg = {G.deg}]")
