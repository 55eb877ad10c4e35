"""Finite groups with fixed element listings, addressed by listing index.

Listings follow the conventions used throughout the constructions:

* cyclic C_n:       {1, a, a^2, ..., a^{n-1}}
* direct product:   first factor varies fastest, so for H x K the listing is
                    k_1 H, k_2 H, ..., k_t H
* dihedral D_2m:    {1, a, ..., a^{m-1}, b, ba, ..., ba^{m-1}}
* Dih(A):           A then bA, with b acting by inversion
"""

from __future__ import annotations

import math

import numpy as np

MUL_TABLE_CAP = 4096


class Group:
    """Base class; concrete groups implement mul/inv/name on indices."""

    order: int
    is_abelian: bool

    def mul(self, i: int, j: int) -> int:
        raise NotImplementedError

    def inv(self, i: int) -> int:
        raise NotImplementedError

    def name(self, i: int) -> str:
        raise NotImplementedError

    def mul_perm(self, i: int) -> np.ndarray:
        """Left-translation permutation: array of mul(i, j) for all j."""
        cache = self.__dict__.setdefault("_perm_cache", {})
        perm = cache.get(i)
        if perm is None:
            perm = np.array([self.mul(i, j) for j in range(self.order)], dtype=np.intp)
            if self.order <= MUL_TABLE_CAP:
                cache[i] = perm
        return perm

    def inv_perm(self) -> np.ndarray:
        perm = self.__dict__.get("_inv_perm")
        if perm is None:
            perm = np.array([self.inv(i) for i in range(self.order)], dtype=np.intp)
            self.__dict__["_inv_perm"] = perm
        return perm

    def identity_ok(self) -> bool:
        return all(
            self.mul(0, i) == i == self.mul(i, 0) for i in range(self.order)
        )

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, Group) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        raise NotImplementedError


class Cyclic(Group):
    def __init__(self, n: int, symbol: str = "a"):
        if n < 1:
            raise ValueError("cyclic group order must be >= 1")
        self.order = n
        self.symbol = symbol
        self.is_abelian = True

    def mul(self, i, j):
        return (i + j) % self.order

    def inv(self, i):
        return (-i) % self.order

    def name(self, i):
        if i == 0:
            return "1"
        if i == 1:
            return self.symbol
        return f"{self.symbol}^{i}"

    def key(self):
        return ("C", self.order, self.symbol)

    def __repr__(self):
        return f"C{self.order}"


class DirectProduct(Group):
    """Direct product; factor 0 varies fastest in the listing."""

    def __init__(self, factors):
        factors = list(factors)
        if not factors:
            raise ValueError("empty direct product")
        self.factors = factors
        self.order = math.prod(f.order for f in factors)
        self.is_abelian = all(f.is_abelian for f in factors)
        self._strides = []
        s = 1
        for f in factors:
            self._strides.append(s)
            s *= f.order

    def split(self, i):
        out = []
        for f in self.factors:
            out.append(i % f.order)
            i //= f.order
        return out

    def join(self, parts):
        i = 0
        for f, p in zip(reversed(self.factors), reversed(parts)):
            i = i * f.order + p
        return i

    def mul(self, i, j):
        return self.join(
            [f.mul(a, b) for f, a, b in zip(self.factors, self.split(i), self.split(j))]
        )

    def inv(self, i):
        return self.join([f.inv(a) for f, a in zip(self.factors, self.split(i))])

    def name(self, i):
        parts = [
            f.name(a) for f, a in zip(self.factors, self.split(i)) if a != 0
        ]
        return "*".join(parts) if parts else "1"

    def embed(self, factor_index: int, i: int) -> int:
        """Index of an element living purely in one factor."""
        return i * self._strides[factor_index]

    def key(self):
        return ("x",) + tuple(f.key() for f in self.factors)

    def __repr__(self):
        return "x".join(repr(f) for f in self.factors)


class GeneralizedDihedral(Group):
    """Dih(A) = A semidirect C_2 with the involution inverting A.

    Listing is A then bA; element |A|+x stands for b*a_x.
    """

    def __init__(self, base: Group, symbol: str = "b"):
        if not base.is_abelian:
            raise ValueError("generalized dihedral requires an abelian base")
        self.base = base
        self.symbol = symbol
        self.order = 2 * base.order
        self.is_abelian = base.order <= 2

    def _split(self, i):
        return divmod(i, self.base.order)  # (b-flag, base index)

    def mul(self, i, j):
        n = self.base.order
        bi, x = self._split(i)
        bj, y = self._split(j)
        # (b^bi a_x)(b^bj a_y) = b^(bi+bj) a_{x^((-1)^bj)} a_y
        xx = self.base.inv(x) if bj else x
        return ((bi ^ bj) * n) + self.base.mul(xx, y)

    def inv(self, i):
        n = self.base.order
        bi, x = self._split(i)
        if bi:
            return i  # (b a_x)^-1 = b a_x
        return self.base.inv(x)

    def name(self, i):
        bi, x = self._split(i)
        base = self.base.name(x)
        if not bi:
            return base
        return self.symbol if base == "1" else f"{self.symbol}*{base}"

    def key(self):
        return ("Dih", self.base.key(), self.symbol)

    def __repr__(self):
        return f"Dih({self.base!r})"


def dihedral(order: int) -> GeneralizedDihedral:
    """Dihedral group D_2m of the given (even) order."""
    if order % 2 or order < 2:
        raise ValueError("dihedral order must be even and >= 2")
    return GeneralizedDihedral(Cyclic(order // 2, "a"))


def cyclic_tower(orders, prefix: str = "a") -> DirectProduct:
    """C_{r1} x C_{r2} x ... with symbols a1, a2, ..."""
    return DirectProduct(
        [Cyclic(r, f"{prefix}{i + 1}") for i, r in enumerate(orders)]
    )
