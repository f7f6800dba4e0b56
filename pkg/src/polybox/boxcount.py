"""Enumerate curve points inside boxes and measure growth exponents.

Three interchangeable enumeration strategies:

* ``naive``  -- double loop over the box, exact evaluation per pair.
* ``crt``    -- per-x root finding: reduce the curve modulo a set of
  auxiliary irreducibles whose norm product exceeds q**(2B) (B bounds the
  degree of any box value), look roots up in precomputed residue tables,
  lift candidates by CRT, then confirm membership and the exact equation.
* ``graph``  -- closed-form walk for c*Y + c'*X^e shapes on base-0 boxes,
  where the viable x-degrees are decided by degree arithmetic alone.

All strategies return identical point sets; ``auto`` picks by shape and
size.  Residue statistics (the reduction-multiplicity profile of a point
set modulo f) live here too.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product

from .intervals import Interval, zero_interval
from .curves import BivarPoly
from .poly import Poly, one, sort_key, zero
from .residues import ResidueRing

_NAIVE_LIMIT = 1 << 16   # pair count up to which the double loop is fine
_COMBO_CAP = 4096        # CRT candidate combinations per x before fallback
_MODULUS_SIZE_CAP = 128  # preferred residue-plane size for root tables


@dataclass(frozen=True)
class PointSet:
    """Deduplicated zeros of a curve inside a box, canonically sorted."""

    points: tuple
    curve: BivarPoly
    box: tuple

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _sorted_points(pts) -> tuple:
    return tuple(sorted(set(pts),
                        key=lambda p: (sort_key(p[0]), sort_key(p[1]))))


# -- strategy: naive --

def _naive_points(F: BivarPoly, box_x: Interval, box_y: Interval):
    ycoeffs = F.y_coefficients()
    jmax = max(ycoeffs)
    fld = F.field
    out = []
    for x in box_x:
        xpow = [one(fld)]
        for _ in range(int(F.deg_x) if F.deg_x > 0 else 0):
            xpow.append(xpow[-1] * x)
        cs = []
        for j in range(jmax + 1):
            row = ycoeffs.get(j)
            if row is None:
                cs.append(zero(fld))
            else:
                acc = zero(fld)
                for i, c in enumerate(row):
                    if c:
                        acc = acc + c * xpow[i]
                cs.append(acc)
        for y in box_y:
            acc = zero(fld)
            for c in reversed(cs):
                acc = acc * y + c
            if not acc:
                out.append((x, y))
    return out


# -- strategy: graph --

def _graph_shape(F: BivarPoly):
    """(e, c_const, c_prime) for F = c*Y + c'*X^e with constant unit c."""
    keys = set(F.terms)
    if (0, 1) not in keys:
        return None
    cy = F.terms[(0, 1)]
    if cy.degree != 0:
        return None
    rest = keys - {(0, 1)}
    if len(rest) != 1:
        return None
    (e, j0), = rest
    if j0 != 0 or e < 1:
        return None
    return e, cy, F.terms[(e, 0)]


def _graph_applicable(F, box_x, box_y) -> bool:
    return (_graph_shape(F) is not None
            and not box_x.base and not box_y.base)


def _graph_points(F: BivarPoly, box_x: Interval, box_y: Interval):
    e, cy, cx = _graph_shape(F)
    fld = F.field
    ratio = (-cx).scaled(fld.inv(cy.coeffs[0]))   # y = ratio * x**e
    # deg(ratio * x**e) = deg ratio + e*deg x exactly (single term), so the
    # viable x are those of degree <= dmax, and every constructed pair lies
    # in the box and on the curve; a prefix is re-verified as a tripwire
    # (full equivalence with naive/crt is covered by tests).
    dmax = min(box_x.bound, (box_y.bound - int(ratio.degree)) // e)
    cands = zero_interval(fld, dmax) if dmax >= 0 else [zero(fld)]
    scale_unit = ratio.coeffs == (fld.one,)
    out = []
    for x in cands:
        xe = x * x
        if e == 3:
            xe = xe * x
        elif e == 4:
            xe = xe * xe
        elif e != 2:
            xe = x ** e
        y = xe if scale_unit else ratio * xe
        if len(out) < 64 and (not box_x.contains(x)
                              or not box_y.contains(y)
                              or F.evaluate(x, y)):
            raise AssertionError("graph strategy produced an invalid point")
        out.append((x, y))
    return out


# -- strategy: crt --

_IRREDUCIBLE_CACHE: dict = {}


def _monic_irreducibles_of_degree(fld, deg):
    from .poly import is_irreducible
    key = (fld, deg)
    cached = _IRREDUCIBLE_CACHE.get(key)
    if cached is None:
        cached = tuple(cand for tail in product(fld.elements(), repeat=deg)
                       for cand in (Poly(fld, tuple(tail) + (fld.one,)),)
                       if is_irreducible(cand))
        _IRREDUCIBLE_CACHE[key] = cached
    return cached


class CrtRootSolver:
    """Root tables of F modulo auxiliary irreducibles, with CRT lifting."""

    def __init__(self, F: BivarPoly, value_degree_bound: int,
                 combo_cap: int = _COMBO_CAP):
        fld = F.field
        self.F = F
        self.combo_cap = combo_cap
        needed = 2 * value_degree_bound + 1
        cap_deg = 1
        while fld.q ** (cap_deg + 1) <= _MODULUS_SIZE_CAP:
            cap_deg += 1
        moduli = []
        taken: dict[int, int] = {}
        total = 0
        while total < needed:
            # prefer a degree that closes the gap, within the size cap
            want = min(cap_deg, needed - total)
            chosen = None
            candidates = list(range(want, 0, -1))
            grow = cap_deg + 1
            while chosen is None:
                if candidates:
                    d = candidates.pop(0)
                else:
                    d = grow
                    grow += 1
                pool = _monic_irreducibles_of_degree(fld, d)
                idx = taken.get(d, 0)
                while idx < len(pool):
                    u = pool[idx]
                    idx += 1
                    ring = ResidueRing(u, check=False)
                    if F.reduce_mod(ring):
                        chosen = ring
                        break
                taken[d] = idx
            moduli.append(chosen)
            total += chosen.deg
        self.rings = moduli
        self.tables = [self._root_table(r) for r in moduli]
        M = one(fld)
        for r in moduli:
            M = M * r.f
        self.M = M
        self.basis = []
        for r in moduli:
            Mi = M // r.f
            inv = r.inv(Mi % r.f)
            self.basis.append((Mi * inv) % M)

    def _root_table(self, ring: ResidueRing):
        Fr = self.F.reduce_mod(ring)
        ycoeffs = Fr.y_coefficients()
        jmax = max(ycoeffs)
        fld = self.F.field
        table = {}
        residues = list(ring.elements())
        for x in residues:
            cs = []
            for j in range(jmax + 1):
                row = ycoeffs.get(j)
                if row is None:
                    cs.append(zero(fld))
                else:
                    acc = zero(fld)
                    for c in reversed(row):
                        acc = (acc * x + c) % ring.f
                    cs.append(acc)
            roots = []
            for y in residues:
                acc = zero(fld)
                for c in reversed(cs):
                    acc = (acc * y + c) % ring.f
                if not acc:
                    roots.append(y)
            if roots:
                table[x.coeffs] = tuple(roots)
        return table

    def candidates(self, x: Poly):
        """Candidate y values for this x, or None when capped."""
        root_lists = []
        size = 1
        for ring, table in zip(self.rings, self.tables):
            roots = table.get((x % ring.f).coeffs)
            if not roots:
                return ()
            root_lists.append(roots)
            size *= len(roots)
            if size > self.combo_cap:
                return None
        out = []
        for combo in product(*root_lists):
            y = zero(self.F.field)
            for r, e in zip(combo, self.basis):
                y = y + r * e
            out.append(y % self.M)
        return out


def _crt_points(F, box_x, box_y, solver=None):
    if solver is None:
        bound = max(box_x.max_degree(), box_y.max_degree())
        solver = CrtRootSolver(F, bound)
    out = []
    for x in box_x:
        cands = solver.candidates(x)
        if cands is None:
            for y in box_y:
                if not F.evaluate(x, y):
                    out.append((x, y))
            continue
        for y in cands:
            if box_y.contains(y) and not F.evaluate(x, y):
                out.append((x, y))
    return out


# -- public entry points --

def _resolve_strategy(F, box_x, box_y, strategy):
    if strategy != "auto":
        return strategy
    if _graph_applicable(F, box_x, box_y):
        return "graph"
    if box_x.size * box_y.size <= _NAIVE_LIMIT:
        return "naive"
    return "crt"


def _chunk_points(args):
    F, xs, box_y, solver = args
    out = []
    for x in xs:
        cands = solver.candidates(x)
        if cands is None:
            for y in box_y:
                if not F.evaluate(x, y):
                    out.append((x, y))
            continue
        for y in cands:
            if box_y.contains(y) and not F.evaluate(x, y):
                out.append((x, y))
    return out


def enumerate_box_points(F: BivarPoly, box_x: Interval,
                         box_y: Interval | None = None,
                         strategy: str = "auto", jobs: int = 1,
                         _solver: CrtRootSolver | None = None) -> PointSet:
    """All zeros of F in box_x x box_y (box_y defaults to box_x)."""
    if not F:
        raise ValueError("cannot enumerate zeros of the zero polynomial")
    if box_y is None:
        box_y = box_x
    strategy = _resolve_strategy(F, box_x, box_y, strategy)
    if strategy == "graph":
        if not _graph_applicable(F, box_x, box_y):
            raise ValueError("graph strategy needs c*Y + c'*X^e on base-0 boxes")
        pts = _graph_points(F, box_x, box_y)
    elif strategy == "naive":
        pts = _naive_points(F, box_x, box_y)
    elif strategy == "crt":
        if jobs > 1:
            solver = _solver
            if solver is None:
                bound = max(box_x.max_degree(), box_y.max_degree())
                solver = CrtRootSolver(F, bound)
            xs = list(box_x)
            step = max(1, math.ceil(len(xs) / jobs))
            chunks = [(F, xs[i:i + step], box_y, solver)
                      for i in range(0, len(xs), step)]
            pts = []
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for part in pool.map(_chunk_points, chunks):
                    pts.extend(part)
        else:
            pts = _crt_points(F, box_x, box_y, solver=_solver)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return PointSet(points=_sorted_points(pts), curve=F, box=(box_x, box_y))


@dataclass(frozen=True)
class ScanRow:
    n: int
    size: int       # |I| = q**(n+1)
    count: int
    exponent: float  # log |S| / log |I|, 0 when |S| <= 1


@dataclass(frozen=True)
class ExponentScan:
    rows: tuple

    def fitted_exponent(self) -> float:
        """Least-squares slope of log|S| against log|I| (rows with |S|>=1)."""
        pts = [(math.log(r.size), math.log(r.count))
               for r in self.rows if r.count >= 1]
        if len(pts) < 2:
            return 0.0
        mx = sum(x for x, _ in pts) / len(pts)
        my = sum(y for _, y in pts) / len(pts)
        sxx = sum((x - mx) ** 2 for x, _ in pts)
        if sxx == 0:
            return 0.0
        sxy = sum((x - mx) * (y - my) for x, y in pts)
        return sxy / sxx


def exponent_scan(F: BivarPoly, ns, base_x: Poly | None = None,
                  base_y: Poly | None = None, strategy: str = "auto",
                  jobs: int = 1) -> ExponentScan:
    """One row per n: box size, point count, and the per-row exponent."""
    ns = sorted(set(int(n) for n in ns))
    if not ns:
        raise ValueError("empty n range")
    fld = F.field
    bx = base_x if base_x is not None else zero(fld)
    by = base_y if base_y is not None else zero(fld)
    solver = None
    rows = []
    for n in ns:
        box_x = Interval(bx, n)
        box_y = Interval(by, n)
        strat = _resolve_strategy(F, box_x, box_y, strategy)
        if strat == "crt" and solver is None:
            top = max(Interval(bx, ns[-1]).max_degree(),
                      Interval(by, ns[-1]).max_degree())
            solver = CrtRootSolver(F, top)
        S = enumerate_box_points(F, box_x, box_y, strategy=strat, jobs=jobs,
                                 _solver=solver if strat == "crt" else None)
        size = box_x.size
        count = len(S)
        expo = 0.0 if count <= 1 else math.log(count) / math.log(size)
        rows.append(ScanRow(n=n, size=size, count=count, exponent=expo))
    return ExponentScan(rows=tuple(rows))


# -- residue statistics --

@dataclass(frozen=True)
class ResidueProfile:
    """Reduction profile of a point set modulo f."""

    modulus: Poly
    size: int                      # |S|
    counts: dict = dc_field(compare=False)  # (x mod f, y mod f) -> multiplicity

    @property
    def distinct(self) -> int:
        return len(self.counts)

    @property
    def density(self) -> Fraction:
        """Distinct residues divided by |f| (the profile's alpha)."""
        return Fraction(self.distinct, self.modulus.norm)

    def weights(self) -> dict:
        """Residue -> fraction of S reducing to it (the rho values)."""
        return {k: Fraction(v, self.size) for k, v in self.counts.items()}

    def sum_squared_weights(self) -> Fraction:
        return sum((Fraction(v, self.size) ** 2 for v in self.counts.values()),
                   Fraction(0))

    def cauchy_lower_bound(self) -> Fraction:
        """1 / (density * |f|); sum of squared weights never drops below."""
        return 1 / (self.density * self.modulus.norm)

    def cauchy_ok(self) -> bool:
        return self.sum_squared_weights() >= self.cauchy_lower_bound()


def residue_stats(S, f) -> ResidueProfile:
    """Exact multiplicity profile of S modulo irreducible f."""
    points = list(S)
    if not points:
        raise ValueError("residue statistics need a nonempty point set")
    ring = f if isinstance(f, ResidueRing) else ResidueRing(f)
    counts: dict = {}
    for (x, y) in points:
        key = (x % ring.f, y % ring.f)
        counts[key] = counts.get(key, 0) + 1
    return ResidueProfile(modulus=ring.f, size=len(points), counts=counts)
