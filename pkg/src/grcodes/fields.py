"""Finite field arithmetic GF(p^k) with exp/log tables.

Elements are plain integers in [0, q).  The integer's base-p digits are the
coefficients of the element written in the polynomial basis, so for GF(2^k)
the index is just the usual bit representation and addition is XOR.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_FIELD_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_mul_mod(a, b, modulus, p):
    """Multiply coefficient lists a*b mod (modulus, p). modulus is monic."""
    k = len(modulus) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                res[i + j] = (res[i + j] + ca * cb) % p
    # reduce
    for i in range(len(res) - 1, k - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(k):
                res[i - k + j] = (res[i - k + j] - c * modulus[j]) % p
    return res[:k] + [0] * (k - len(res))


def _poly_divisible(poly, div, p):
    """True if div divides poly over Z_p.  Both monic-ish coefficient lists."""
    rem = list(poly)
    dd = len(div) - 1
    inv_lead = pow(div[-1], p - 2, p) if p > 2 else div[-1]
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            f = (c * inv_lead) % p
            for j in range(dd + 1):
                rem[i - dd + j] = (rem[i - dd + j] - f * div[j]) % p
    return not any(rem[:dd])


def _monic_polys(degree, p):
    """All monic polynomials of given degree over Z_p, low coefficients first."""
    for m in range(p**degree):
        coeffs = []
        t = m
        for _ in range(degree):
            coeffs.append(t % p)
            t //= p
        yield coeffs + [1]


def smallest_irreducible(p: int, k: int):
    """Lexicographically smallest monic irreducible of degree k over Z_p."""
    if k == 1:
        return [0, 1]  # x; arithmetic is plain mod p
    for cand in _monic_polys(k, p):
        if any(
            _poly_divisible(cand, div, p)
            for d in range(1, k // 2 + 1)
            for div in _monic_polys(d, p)
        ):
            continue
        return cand
    raise RuntimeError(f"no irreducible of degree {k} over Z_{p}")


class Field:
    """GF(p^k) context: element arithmetic plus exp/log tables.

    Immutable after construction; all operations are pure.
    """

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if k < 1:
            raise ValueError("degree must be >= 1")
        q = p**k
        if q > MAX_FIELD_ORDER:
            raise ValueError(f"field order {q} exceeds cap {MAX_FIELD_ORDER}")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = smallest_irreducible(p, k)
        self._build_tables()

    # -- construction helpers ------------------------------------------

    def _idx_to_poly(self, idx):
        coeffs = []
        for _ in range(self.k):
            coeffs.append(idx % self.p)
            idx //= self.p
        return coeffs

    def _poly_to_idx(self, coeffs):
        idx = 0
        for c in reversed(coeffs[: self.k]):
            idx = idx * self.p + c
        return idx

    def _raw_mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        pa, pb = self._idx_to_poly(a), self._idx_to_poly(b)
        return self._poly_to_idx(_poly_mul_mod(pa, pb, self.modulus, self.p))

    def _build_tables(self):
        q = self.q
        # find a primitive element by exhaustion (smallest index wins)
        exp = None
        for g in range(2 if q > 2 else 1, q):
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = self._raw_mul(x, g)
            if len(powers) == q - 1:
                exp = powers  # exp[i] = g^i
                break
        if exp is None:
            raise RuntimeError("no primitive element found")
        self.generator = exp[1] if q > 2 else 1
        self.exp = exp  # length q-1, exp[i] = g^i
        log = [-1] * q
        for i, e in enumerate(exp):
            log[e] = i
        self.log = log
        # dense op tables for vectorized group-ring / matrix arithmetic
        if q <= 256:
            add = np.empty((q, q), dtype=np.uint8)
            mul = np.empty((q, q), dtype=np.uint8)
            for a in range(q):
                for b in range(q):
                    add[a, b] = self.add(a, b)
                    mul[a, b] = self._raw_mul(a, b)
            self.add_table = add
            self.mul_table = mul
        else:
            self.add_table = None
            self.mul_table = None

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        pa, pb = self._idx_to_poly(a), self._idx_to_poly(b)
        return self._poly_to_idx([(x + y) % self.p for x, y in zip(pa, pb)])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.k == 1:
            return (-a) % self.p
        return self._poly_to_idx([(-c) % self.p for c in self._idx_to_poly(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def conj(self, a: int) -> int:
        """Frobenius conjugation x -> x^2; only meaningful over GF(4)."""
        if self.q != 4:
            raise ValueError("conjugation is defined only over GF(4)")
        return self.mul(a, a)

    # -- misc ----------------------------------------------------------

    @property
    def omega(self) -> int:
        """The primitive element (generator), e.g. omega in GF(4)."""
        return self.generator

    def element_str(self, a: int) -> str:
        if self.q == 4:
            return {0: "0", 1: "1", 2: "w", 3: "W"}[a]
        return str(a)

    def __repr__(self):
        return f"Field(GF({self.p}^{self.k}))" if self.k > 1 else f"Field(GF({self.p}))"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))


@lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> Field:
    """Shared, cached field contexts (they are immutable)."""
    return Field(p, k)


GF2 = field_make(2, 1)
GF4 = field_make(2, 2)
