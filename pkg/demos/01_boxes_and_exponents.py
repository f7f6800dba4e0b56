"""Boxes in F_q[T] and how curve point counts grow with box size.

An "interval" here is a box base + {Y : deg Y <= n} holding q^(n+1)
polynomials; the norm |X| = q^deg(X) plays the role of absolute value.
We enumerate the zeros of a plane curve inside I x I and watch the
exponent log|S| / log|I|.
"""

from polybox import (GF, bivar, enumerate_box_points, exponent_scan,
                     zero_interval)

F2 = GF(2)

print("== The box {deg <= 1} over F_2 ==")
I = zero_interval(F2, 1)
print(f"size q^(n+1) = {I.size}: ", ", ".join(str(x.coeffs) for x in I))
print()

print("== Zeros of Y = X^2 in a box ==")
parabola = bivar(F2, {(0, 1): 1, (2, 0): 1})   # Y - X^2 (char 2)
for n in (2, 4, 6):
    S = enumerate_box_points(parabola, zero_interval(F2, n))
    print(f"n = {n}: |I| = {2 ** (n + 1):5d}, |S| = {len(S):3d} "
          f"(x of degree <= {n // 2})")
print()

print("== Growth exponent along n: expect ~1/d for Y = X^d ==")
for d in (2, 3):
    curve = bivar(F2, {(0, 1): 1, (d, 0): 1})
    scan = exponent_scan(curve, range(6, 13))
    print(f"d = {d}:")
    print("  n  size_I  count  exponent")
    for row in scan.rows:
        print(f"  {row.n:<2d} {row.size:<7d} {row.count:<6d} "
              f"{row.exponent:.4f}")
    print(f"  fitted slope: {scan.fitted_exponent():.4f} "
          f"(1/d = {1 / d:.4f})")
    print()

print("== Strategies agree ==")
box = zero_interval(F2, 4)
for strategy in ("naive", "crt", "graph"):
    S = enumerate_box_points(parabola, box, strategy=strategy)
    print(f"{strategy:>6}: {len(S)} points")
