"""Arithmetic in the coefficient field F_q, q = p^k.

Elements are plain integers 0..q-1.  For a prime field the integer is the
usual representative mod p.  For an extension field F_p[u]/(m(u)) the
integer encodes the u-coefficient vector as e = sum c_i * p^i, so the
element written c_0 + c_1*u + ... has c_0 as its least significant digit.
Ascending integers give the canonical element order used everywhere
(interval enumeration, deterministic searches, report sorting); on a prime
field this is the integer order on representatives.

Extension moduli come from a fixed built-in table for small (p, k) and
from a seeded deterministic search otherwise; the modulus is always
recorded on the field object so runs are reproducible.
"""

from __future__ import annotations

import math
from typing import Sequence

# Fixed moduli (coefficients of m(u), ascending powers, monic) for common
# small extensions.  Validated by the irreducibility check at construction.
_BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
}

_TABLE_LIMIT = 4096  # largest q for which dense mul tables are built


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- helpers on F_p coefficient lists (ascending powers); used only for the
#    extension-field bootstrap, general polynomials live in poly.py --

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _prem(a, b, p):
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        if a[-1]:
            q = a[-1] * inv_lead % p
            off = len(a) - len(b)
            for j, bj in enumerate(b):
                a[off + j] = (a[off + j] - q * bj) % p
        a.pop()
    return _trim(a)


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _prem(a, b, p)
    return a


def _ppowmod_u(e: int, f, p):
    """u^e mod f(u) over F_p, square-and-multiply."""
    result = [1]
    base = _prem([0, 1], f, p)
    while e:
        if e & 1:
            result = _prem(_pmul(result, base, p), f, p)
        base = _prem(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _minus_u(c, p):
    c = list(c) + [0] * max(0, 2 - len(c))
    c[1] = (c[1] - 1) % p
    return _trim(c)


def _p_irreducible(f, p) -> bool:
    """Rabin irreducibility test for monic f over F_p, deg f >= 1."""
    n = len(f) - 1
    if n == 1:
        return True
    if _ppowmod_u(p ** n, f, p) != [0, 1]:
        return False
    for r in prime_factors(n):
        g = _pgcd(f, _minus_u(_ppowmod_u(p ** (n // r), f, p), p), p)
        if len(g) != 1:
            return False
    return True


class FiniteField:
    """The field F_q with q = p^k, elements encoded as integers 0..q-1."""

    __slots__ = ("p", "k", "q", "modulus", "_mul_table", "_inv_table", "_hash")

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None,
                 seed: int = 0):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.k = k
        self.q = p ** k
        if k == 1:
            if modulus is not None:
                raise ValueError("prime field takes no modulus")
            self.modulus = None
            self._mul_table = None
            self._inv_table = None
        else:
            if modulus is None:
                modulus = self._pick_modulus(p, k, seed)
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            if not _p_irreducible(list(modulus), p):
                raise ValueError("modulus is not irreducible over F_p")
            self.modulus = modulus
            self._build_tables()
        self._hash = hash((self.p, self.k, self.modulus))

    @staticmethod
    def _pick_modulus(p, k, seed):
        if (p, k) in _BUILTIN_MODULI:
            return _BUILTIN_MODULI[(p, k)]
        import random
        rng = random.Random(seed)
        while True:
            cand = [rng.randrange(p) for _ in range(k)] + [1]
            if _p_irreducible(cand, p):
                return tuple(cand)

    # -- integer <-> u-coefficient vector (ascending powers, little-endian) --

    def element_coeffs(self, e: int) -> tuple:
        digits = []
        for _ in range(self.k):
            digits.append(e % self.p)
            e //= self.p
        return tuple(digits)

    def element_from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.k:
            raise ValueError("too many u-coefficients")
        e = 0
        for c in reversed(list(coeffs)):
            e = e * self.p + c % self.p
        return e

    def _build_tables(self):
        p, k, q, m = self.p, self.k, self.q, self.modulus
        if q > _TABLE_LIMIT:
            raise ValueError(f"extension field too large for dense tables (q={q})")
        vecs = [_trim(list(self.element_coeffs(e))) for e in range(q)]
        mul = [0] * (q * q)
        for a in range(q):
            row = a * q
            for b in range(a, q):
                prod = _prem(_pmul(vecs[a], vecs[b], p), list(m), p)
                e = self.element_from_coeffs(prod)
                mul[row + b] = e
                mul[b * q + a] = e
        self._mul_table = mul
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a * q + b] == 1:
                    inv[a] = b
                    break
        self._inv_table = inv

    # -- arithmetic --

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.k == 1:
            return (a + b) % p
        out = 0
        shift = 1
        for _ in range(self.k):
            out += (a + b) % p * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if self.k == 1:
            return -a % p
        out = 0
        shift = 1
        for _ in range(self.k):
            out += -a % p * shift
            a //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        return self._mul_table[a * self.q + b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._inv_table[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.k == 1:
            return pow(a, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def elements(self) -> range:
        """All elements in canonical order."""
        return range(self.q)

    def random_element(self, rng) -> int:
        return rng.randrange(self.q)

    # -- identity --

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and self.p == other.p and self.k == other.k
                and self.modulus == other.modulus)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}; m={list(self.modulus)})"

    def describe(self) -> dict:
        """JSON-friendly field parameters (modulus always recorded)."""
        d = {"p": self.p, "k": self.k, "q": self.q}
        if self.modulus is not None:
            d["modulus"] = list(self.modulus)
        return d


def GF(q: int, seed: int = 0) -> FiniteField:
    """Build F_q from a prime power q."""
    if q < 2:
        raise ValueError("q must be a prime power >= 2")
    p = min(prime_factors(q))
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return FiniteField(p, k, seed=seed)
