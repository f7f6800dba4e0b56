"""Bivariate polynomials over F_q[T] and their curves.

A BivarPoly maps exponent pairs (i, j) to nonzero Poly coefficients.
Operations: exact evaluation, degree statistics, reduction and exhaustive
point counting modulo an irreducible f (with a vectorized fast path for
prime base fields), point-count windows around |f|, and invertible linear
changes of variables including the search for a transform that realizes
the full total degree in X.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .poly import NEG_INF, Poly, constant, one, zero
from .residues import ResidueRing

_VECTOR_THRESHOLD = 400  # residue-field size where numpy paths take over


class BivarPoly:
    """Element of (F_q[T])[X, Y] as a sparse exponent-to-coefficient map."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms: dict):
        clean = {}
        for (i, j), c in terms.items():
            if not isinstance(c, Poly):
                raise TypeError("coefficients must be Poly")
            if c.field != field:
                raise ValueError("mismatched field parameters")
            if c:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("BivarPoly is immutable")

    def __reduce__(self):
        return (BivarPoly, (self.field, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, BivarPoly) and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, tuple(sorted(self.terms.items(),
                                              key=lambda kv: kv[0]))))

    def __repr__(self):
        from .grammar import curve_text
        return f"BivarPoly({curve_text(self)!r})"

    # -- degree statistics --

    @property
    def deg(self):
        return max((i + j for i, j in self.terms), default=NEG_INF)

    @property
    def deg_x(self):
        return max((i for i, _ in self.terms), default=NEG_INF)

    @property
    def deg_y(self):
        return max((j for _, j in self.terms), default=NEG_INF)

    @property
    def deg_t(self):
        return max((c.degree for c in self.terms.values()), default=NEG_INF)

    # -- ring structure --

    def __add__(self, other):
        if other.field != self.field:
            raise ValueError("mismatched field parameters")
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc = out.get(key)
            s = c if acc is None else acc + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        return BivarPoly(self.field, out)

    def __neg__(self):
        return BivarPoly(self.field, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if other.field != self.field:
            raise ValueError("mismatched field parameters")
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                prod = c1 * c2
                acc = out.get(key)
                s = prod if acc is None else acc + prod
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return BivarPoly(self.field, out)

    def scaled(self, g: Poly) -> "BivarPoly":
        if not g:
            return BivarPoly(self.field, {})
        return BivarPoly(self.field, {k: c * g for k, c in self.terms.items()})

    def __pow__(self, e: int):
        result = BivarPoly(self.field, {(0, 0): one(self.field)})
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- evaluation --

    def evaluate(self, X: Poly, Y: Poly) -> Poly:
        """Exact value in F_q[T] (ring homomorphism in each argument)."""
        dx = self.deg_x
        if dx is NEG_INF:
            return zero(self.field)
        xpow = [one(self.field)]
        for _ in range(int(dx)):
            xpow.append(xpow[-1] * X)
        by_j: dict[int, Poly] = {}
        for (i, j), c in self.terms.items():
            v = c * xpow[i]
            acc = by_j.get(j)
            by_j[j] = v if acc is None else acc + v
        acc = zero(self.field)
        for j in range(max(by_j), -1, -1):
            acc = acc * Y
            if j in by_j:
                acc = acc + by_j[j]
        return acc

    def reduce_mod(self, ring: ResidueRing) -> "BivarPoly":
        """Coefficient-wise canonical remainders mod the ring modulus."""
        return BivarPoly(self.field,
                         {k: c % ring.f for k, c in self.terms.items()})

    def y_coefficients(self) -> dict[int, list[Poly]]:
        """j -> ascending X-coefficient list (univariate in X per Y-power)."""
        out: dict[int, list[Poly]] = {}
        for (i, j), c in self.terms.items():
            row = out.setdefault(j, [])
            while len(row) <= i:
                row.append(zero(self.field))
            row[i] = c
        return out


def bivar(field, entries: dict) -> BivarPoly:
    """BivarPoly from {(i, j): Poly-or-int} with ints lifted to constants."""
    terms = {}
    for key, c in entries.items():
        if isinstance(c, int):
            c = constant(field, c)
        terms[key] = c
    return BivarPoly(field, terms)


def degree_stats(F: BivarPoly):
    """(deg, deg_X, deg_Y, deg_T); error for the zero polynomial."""
    if not F:
        raise ValueError("degree statistics of the zero polynomial")
    return (F.deg, F.deg_x, F.deg_y, F.deg_t)


def evaluate(F: BivarPoly, X: Poly, Y: Poly) -> Poly:
    return F.evaluate(X, Y)


# -- point counting mod f --

def _ring_of(f) -> ResidueRing:
    return f if isinstance(f, ResidueRing) else ResidueRing(f)


def is_separable_sum(F: BivarPoly) -> bool:
    """True when no term mixes X and Y (F = A(X) + B(Y) shape)."""
    return all(i == 0 or j == 0 for i, j in F.terms)


def count_points_mod(F: BivarPoly, f, method: str = "auto") -> int:
    """|{(x, y) in (F_q[T]/f)^2 : F(x, y) = 0 mod f}| by exhaustion.

    method: 'auto' picks a histogram path for additively separable F and
    a per-x scan otherwise; 'exhaustive' forces the scan; 'separable'
    forces the histogram (error if F mixes X and Y).  Both paths agree.
    """
    ring = _ring_of(f)
    Fr = F.reduce_mod(ring)
    if not Fr:
        raise ValueError("curve vanishes identically mod f")
    if method == "auto":
        method = "separable" if is_separable_sum(Fr) else "exhaustive"
    if method == "separable":
        if not is_separable_sum(Fr):
            raise ValueError("separable counting needs F = A(X) + B(Y)")
        return _count_separable(Fr, ring)
    if method == "exhaustive":
        return _count_exhaustive(Fr, ring)
    raise ValueError(f"unknown counting method {method!r}")


def _split_separable(Fr: BivarPoly, ring):
    """Coefficient lists of A(X) and B(Y) with F = A + B, constant in A."""
    a_terms: dict[int, Poly] = {}
    b_terms: dict[int, Poly] = {}
    for (i, j), c in Fr.terms.items():
        if j == 0:
            a_terms[i] = c
        else:
            b_terms[j] = c
    da = max(a_terms, default=0)
    db = max(b_terms, default=0)
    A = [a_terms.get(i, zero(Fr.field)) for i in range(da + 1)]
    B = [b_terms.get(j, zero(Fr.field)) for j in range(db + 1)]
    return A, B


def _count_separable(Fr: BivarPoly, ring: ResidueRing) -> int:
    A, B = _split_separable(Fr, ring)
    if ring.field.k == 1 and ring.size >= _VECTOR_THRESHOLD:
        batch = ring.batch()
        xs = batch.digits
        a_vals = batch.eval_univariate(A, xs)
        b_vals = batch.eval_univariate(B, xs)
        hist = batch.histogram((-a_vals) % ring.field.p)
        return int(hist[batch.encode(b_vals)].sum())
    hist: dict = {}
    for x in ring.elements():
        v = _eval_univariate_ring(A, x, ring)
        key = (-v % ring.f).coeffs
        hist[key] = hist.get(key, 0) + 1
    total = 0
    for y in ring.elements():
        v = _eval_univariate_ring(B, y, ring)
        total += hist.get(v.coeffs, 0)
    return total


def _eval_univariate_ring(coeffs: list[Poly], x: Poly, ring: ResidueRing) -> Poly:
    acc = zero(ring.field)
    for c in reversed(coeffs):
        acc = (acc * x + c) % ring.f
    return acc


def _count_exhaustive(Fr: BivarPoly, ring: ResidueRing) -> int:
    ycoeffs = Fr.y_coefficients()
    jmax = max(ycoeffs)
    total = 0
    if ring.field.k == 1 and ring.size >= _VECTOR_THRESHOLD:
        batch = ring.batch()
        ys = batch.digits
        p = ring.field.p
        for x in ring.elements():
            cs = [_eval_univariate_ring(ycoeffs[j], x, ring)
                  if j in ycoeffs else zero(ring.field)
                  for j in range(jmax + 1)]
            vals = batch.eval_univariate(cs, ys)
            total += int(np.count_nonzero(~vals.any(axis=1)))
        return total
    for x in ring.elements():
        cs = [_eval_univariate_ring(ycoeffs[j], x, ring)
              if j in ycoeffs else zero(ring.field)
              for j in range(jmax + 1)]
        for y in ring.elements():
            if not _eval_univariate_ring(cs, y, ring):
                total += 1
    return total


def count_points_by_rows(F: BivarPoly, f) -> int:
    """Same count, summed the other way: per y, roots in x."""
    ring = _ring_of(f)
    Fr = F.reduce_mod(ring)
    if not Fr:
        raise ValueError("curve vanishes identically mod f")
    xcoeffs: dict[int, list[Poly]] = {}
    for (i, j), c in Fr.terms.items():
        row = xcoeffs.setdefault(i, [])
        while len(row) <= j:
            row.append(zero(Fr.field))
        row[j] = c
    imax = max(xcoeffs)
    total = 0
    for y in ring.elements():
        cs = [_eval_univariate_ring(xcoeffs[i], y, ring)
              if i in xcoeffs else zero(Fr.field)
              for i in range(imax + 1)]
        for x in ring.elements():
            if not _eval_univariate_ring(cs, x, ring):
                total += 1
    return total


# -- Weil-type window --

def weierstrass_parts(F: BivarPoly):
    """(a, b) when F equals Y^2 - X^3 - a*X - b, else None."""
    field = F.field
    allowed = {(0, 2), (3, 0), (1, 0), (0, 0)}
    if set(F.terms) - allowed:
        return None
    if F.terms.get((0, 2)) != one(field):
        return None
    if F.terms.get((3, 0)) != -one(field):
        return None
    a = -F.terms.get((1, 0), zero(field))
    b = -F.terms.get((0, 0), zero(field))
    return a, b


def is_smooth_weierstrass(F: BivarPoly) -> bool:
    """Literal discriminant test 4a^3 + 27b^2 != 0 on Weierstrass shape."""
    parts = weierstrass_parts(F)
    if parts is None:
        return False
    a, b = parts
    field = F.field
    four = constant(field, 4 % field.p)
    tseven = constant(field, 27 % field.p)
    return bool(four * a ** 3 + tseven * b ** 2)


@dataclass(frozen=True)
class WeilWindowReport:
    count: int
    size: int          # |f|
    constant: Fraction
    bound: float       # constant * sqrt(|f|)
    passed: bool


def weil_window_check(F: BivarPoly, f, C=None) -> WeilWindowReport:
    """Check |count - |f|| <= C * sqrt(|f|); exact rational comparison.

    Default C: 2 for a smooth Weierstrass curve, else 2 * deg(F)^2.
    """
    ring = _ring_of(f)
    if C is None:
        C = Fraction(2) if is_smooth_weierstrass(F) \
            else Fraction(2 * int(F.deg) ** 2)
    else:
        C = Fraction(C)
    count = count_points_mod(F, ring)
    size = ring.size
    dev = count - size
    passed = dev * dev <= C * C * size
    return WeilWindowReport(count=count, size=size, constant=C,
                            bound=float(C) * math.sqrt(size), passed=passed)


# -- linear transforms --

@dataclass(frozen=True)
class TransformMatrix:
    """Substitution (X, Y) = (A X' + B Y', C X' + D Y'); AD - BC != 0."""

    a: Poly
    b: Poly
    c: Poly
    d: Poly

    def __post_init__(self):
        if not (self.a * self.d - self.b * self.c):
            raise ValueError("transform must have AD - BC != 0")


def identity_transform(field) -> TransformMatrix:
    return TransformMatrix(one(field), zero(field), zero(field), one(field))


def apply_transform(F: BivarPoly, M: TransformMatrix) -> BivarPoly:
    """F'(X', Y') = F(A X' + B Y', C X' + D Y'), expanded exactly."""
    field = F.field
    U = BivarPoly(field, {(1, 0): M.a, (0, 1): M.b})
    V = BivarPoly(field, {(1, 0): M.c, (0, 1): M.d})
    dx = int(F.deg_x) if F else 0
    dy = int(F.deg_y) if F else 0
    upow = [bivar(field, {(0, 0): 1})]
    for _ in range(dx):
        upow.append(upow[-1] * U)
    vpow = [bivar(field, {(0, 0): 1})]
    for _ in range(dy):
        vpow.append(vpow[-1] * V)
    out = BivarPoly(field, {})
    for (i, j), c in F.terms.items():
        out = out + (upow[i] * vpow[j]).scaled(c)
    if F and out.deg != F.deg:
        raise AssertionError("invertible substitution must preserve degree")
    return out


def top_form_value(F: BivarPoly, c: Poly) -> Poly:
    """Value of the top form at (1, c): sum of F_ij c^j over i+j = deg F."""
    d = int(F.deg)
    acc = zero(F.field)
    cpow = [one(F.field)]
    for _ in range(d):
        cpow.append(cpow[-1] * c)
    for (i, j), coeff in F.terms.items():
        if i + j == d:
            acc = acc + coeff * cpow[j]
    return acc


def _shear_candidates(field):
    """c = 0, 1, ... in canonical order, then degree 1, 2, ... polynomials."""
    from itertools import count, product
    for e in field.elements():
        yield Poly(field, (e,))
    for deg in count(1):
        for lead in range(1, field.q):
            for tail in product(field.elements(), repeat=deg):
                yield Poly(field, tuple(tail) + (lead,))


def find_full_degree_transform(F: BivarPoly):
    """(M, F') with deg_X' F' = deg F; tries the shear Y = c X' + Y'.

    The X'^d coefficient after the shear is the top form at (1, c), a
    nonzero polynomial in c of degree <= d, so at most d candidates fail.
    """
    if not F:
        raise ValueError("zero polynomial has no degree transform")
    field = F.field
    d = F.deg
    if F.deg_x == d:
        return identity_transform(field), F
    for c in _shear_candidates(field):
        if top_form_value(F, c):
            M = TransformMatrix(one(field), zero(field), c, one(field))
            out = apply_transform(F, M)
            if out.deg_x != d:
                raise AssertionError("shear failed to realize full X degree")
            return M, out
    raise AssertionError("unreachable: some shear always works")
