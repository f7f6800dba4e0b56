"""Field, polynomial, interval, and distance arithmetic."""

import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polybox import (GF, Interval, NEG_INF, Poly, constant, frac_dist,
                     interval_contains, is_irreducible, monic_irreducibles,
                     one, parse_poly, poly, poly_gcd, poly_norm, poly_text,
                     random_irreducible, zero, zero_interval)
from polybox.poly import powmod, random_poly, T as T_of


def _schoolbook(a, b):
    """Independent convolution oracle for polynomial products."""
    field = a.field
    if not a.coeffs or not b.coeffs:
        return zero(field)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        for j, bj in enumerate(b.coeffs):
            out[i + j] = field.add(out[i + j], field.mul(ai, bj))
    return Poly(field, out)


# -- fields --

def test_field_construction_rejects_bad_params():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(1)
    from polybox.ffield import FiniteField
    with pytest.raises(ValueError):
        FiniteField(4)
    with pytest.raises(ValueError):
        FiniteField(2, 2, modulus=(1, 0, 1))  # (u+1)^2 is reducible


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 25, 27])
def test_field_axioms_spotcheck(q):
    F = GF(q)
    rng = random.Random(q)
    for _ in range(200):
        a, b, c = (F.random_element(rng) for _ in range(3))
        assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
        assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1


def test_extension_modulus_recorded():
    F = GF(9)
    assert F.describe()["modulus"] == [2, 2, 1]
    assert GF(9) == GF(9)


# -- ring ops --

def test_divrem_example_q2(F2):
    t = T_of(F2)
    q, r = divmod(t * t + t, t + one(F2))
    assert (q * (t + one(F2)) + r) == t * t + t  # multiply-back oracle
    assert q == t and not r


def test_mul_identity_random(F2, F3, F9):
    for F in (F2, F3, F9):
        rng = random.Random(17)
        for _ in range(20):
            a = random_poly(F, 6, rng)
            assert a * one(F) == a


def test_mul_example_q3(F3):
    a = poly(F3, [1, 1])
    b = poly(F3, [2, 1])
    assert a * b == poly(F3, [2, 0, 1])        # (T+1)(T+2) = T^2 + 2
    assert a * b == _schoolbook(a, b)


def test_divrem_errors(F2, F3):
    with pytest.raises(ZeroDivisionError):
        divmod(one(F2), zero(F2))
    with pytest.raises(ValueError):
        poly(F2, [1]) + poly(F3, [1])


def test_divrem_roundtrip_exhaustive_q2(F2):
    polys = [Poly(F2, c) for c in product(range(2), repeat=5)]
    for a in polys:
        for b in polys:
            if not b:
                continue
            s, r = divmod(a, b)
            assert s * b + r == a
            assert r.degree < b.degree


# -- norm --

def test_norm_examples(F2):
    assert poly(F2, [1, 0, 0, 1]).norm == 8
    assert poly_norm(zero(F2)) == 0
    assert zero(F2).degree == NEG_INF
    F7 = GF(7)
    assert constant(F7, 5).norm == 1


@given(st.sampled_from([2, 3, 5, 4, 9]), st.data())
@settings(max_examples=200, deadline=None)
def test_norm_multiplicative_and_ultrametric(q, data):
    F = GF(q)
    coeffs = st.lists(st.integers(0, q - 1), max_size=7)
    a = Poly(F, data.draw(coeffs))
    b = Poly(F, data.draw(coeffs))
    if a and b:
        assert (a * b).norm == a.norm * b.norm
    assert (a + b).norm <= max(a.norm, b.norm)
    if a.norm != b.norm:
        assert (a + b).norm == max(a.norm, b.norm)


# -- gcd --

def test_gcd_examples(F2):
    t = T_of(F2)
    assert poly_gcd(t * t + t, t + one(F2)) == t + one(F2)
    a = poly(F2, [1, 1, 0, 1])
    assert poly_gcd(a, zero(F2)) == a.monic()
    assert poly_gcd(poly(F2, [1, 1, 1]), t) == one(F2)
    with pytest.raises(ValueError):
        poly_gcd(zero(F2), zero(F2))


def test_gcd_divides_both(F3):
    rng = random.Random(5)
    for _ in range(50):
        a, b = random_poly(F3, 5, rng), random_poly(F3, 5, rng)
        if not a and not b:
            continue
        g = poly_gcd(a, b)
        if a:
            assert not a % g
        if b:
            assert not b % g


# -- irreducibility --

def test_irreducible_examples(F2, F5):
    assert is_irreducible(poly(F2, [1, 1, 1]))
    assert not is_irreducible(poly(F2, [1, 0, 1]))  # (T+1)^2
    assert is_irreducible(T_of(F2))
    assert is_irreducible(T_of(F5))
    with pytest.raises(ValueError):
        is_irreducible(one(F2))


def test_irreducible_matches_trial_division(F2, F3):
    # oracle: no factorization g*h with positive degrees
    for F in (F2, F3):
        polys_by_deg = {
            d: [Poly(F, c + (1,)) for c in product(range(F.q), repeat=d)]
            for d in range(1, 5)
        }
        for d in range(2, 5):
            for f in polys_by_deg[d]:
                has_factor = any(
                    not f % g
                    for dg in range(1, d // 2 + 1)
                    for g in polys_by_deg[dg]
                )
                assert is_irreducible(f) == (not has_factor)


def test_random_irreducible(F2):
    g = random_irreducible(F2, 1, 3)
    assert g.degree == 1 and g.lead == 1 and is_irreducible(g)
    assert random_irreducible(F2, 5, 0) == random_irreducible(F2, 5, 0)
    # finite-field membership oracle: deg-4 irreducible divides T^16 - T
    # and no T^(2^j) - T for j < 4
    f = random_irreducible(F2, 4, 7)
    t = T_of(F2)
    for j in range(1, 5):
        divides = not (powmod(t, 2 ** j, f) - t % f)
        assert divides == (j == 4)


def test_monic_irreducible_counts(F2, F3):
    # Gauss counts: number of monic irreducibles of degree d over F_q
    expected = {(2, 1): 2, (2, 2): 1, (2, 3): 2, (2, 4): 3,
                (3, 1): 3, (3, 2): 3, (3, 3): 8}
    for (q, d), count in expected.items():
        F = F2 if q == 2 else F3
        got = sum(1 for f in monic_irreducibles(F, d) if f.degree == d)
        assert got == count


# -- frac_dist --

def test_frac_dist_examples(F2):
    t = T_of(F2)
    f = poly(F2, [1, 1, 1])
    assert frac_dist(t ** 3, f) == 1          # T^3 = 1 mod T^2+T+1
    assert frac_dist(f, f) == 0
    assert frac_dist(t, f) == 2


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_frac_dist_invariance(data):
    F = GF(data.draw(st.sampled_from([2, 3, 5])))
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    f = random_irreducible(F, rng.randrange(1, 5), rng.randrange(100))
    X = random_poly(F, 8, rng)
    Y = random_poly(F, 4, rng)
    assert frac_dist(X + f * Y, f) == frac_dist(X, f)
    assert (frac_dist(X, f) == 0) == (not X % f)
    assert frac_dist(X, f) < f.norm


# -- intervals --

def test_interval_enumeration_q2(F2):
    I = zero_interval(F2, 1)
    members = list(I)
    assert len(members) == 4 == I.size
    assert set(members) == {zero(F2), one(F2), T_of(F2),
                            T_of(F2) + one(F2)}
    assert not interval_contains(I, poly(F2, [0, 0, 1]))


def test_interval_base_shift(F2):
    base = poly(F2, [0, 0, 0, 1])
    I = Interval(base, 1)
    assert all(I.contains(x) for x in I)
    assert not I.contains(base + poly(F2, [0, 0, 1]))
    assert len(set(I)) == I.size


def test_interval_cardinality_cross_check():
    for q in (2, 3):
        F = GF(q)
        for n in range(4):
            I = zero_interval(F, n)
            members = list(I)
            assert len(members) == len(set(members)) == q ** (n + 1)
            universe = [Poly(F, c) for c in product(range(q), repeat=n + 2)]
            inside = [x for x in universe if I.contains(x)]
            assert set(inside) == set(members)


def test_interval_rejects_negative_bound(F2):
    with pytest.raises(ValueError):
        zero_interval(F2, -1)


# -- grammar round-trips --

def test_poly_grammar_examples(F5, F2):
    assert poly_text(parse_poly(F5, "T^3+2*T+1")) == "T^3+2*T+1"
    assert parse_poly(F5, "7*T") == poly(F5, [0, 2])
    assert parse_poly(F2, "0") == zero(F2)
    assert poly_text(zero(F2)) == "0"


def test_poly_grammar_roundtrip_corpus():
    rng = random.Random(11)
    for q in (2, 3, 5):
        F = GF(q)
        for _ in range(60):
            a = random_poly(F, rng.randrange(0, 7), rng)
            assert parse_poly(F, poly_text(a)) == a


def test_poly_grammar_extension_json(F4):
    a = Poly(F4, (1, 2))
    text = poly_text(a)
    assert parse_poly(F4, text) == a


def test_poly_grammar_errors(F2):
    from polybox import ParseError
    with pytest.raises(ParseError):
        parse_poly(F2, "T^")
    with pytest.raises(ParseError):
        parse_poly(F2, "1++T")


# -- residue fields --

def test_residue_sqrt_all_cases(F2, F3, F5):
    from polybox import ResidueRing
    rings = [
        ResidueRing(poly(F2, [1, 1, 0, 1])),   # char 2, size 8
        ResidueRing(poly(F3, [1, 1])),         # size 3 = 3 mod 4
        ResidueRing(poly(F3, [1, 0, 1])),      # size 9 = 1 mod 4 (Tonelli)
        ResidueRing(T_of(F5)),                 # size 5 = 1 mod 4 (Tonelli)
    ]
    for ring in rings:
        squares = {ring.mul(x, x) for x in ring.elements()}
        rooted = 0
        for x in ring.elements():
            r = ring.sqrt(x)
            if r is not None:
                assert ring.mul(r, r) == ring.reduce(x)
                rooted += 1
            else:
                assert x not in squares
        assert rooted == len(squares)


def test_residue_inverse_roundtrip(F3):
    from polybox import ResidueRing
    ring = ResidueRing(poly(F3, [1, 0, 1]))
    for x in ring.elements():
        if x:
            assert ring.mul(x, ring.inv(x)) == one(F3)
