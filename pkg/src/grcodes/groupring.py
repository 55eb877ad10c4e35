"""Group-ring elements: dense coefficient vectors over a group listing."""

from __future__ import annotations

import numpy as np

from .fields import Field
from .groups import Group
from .linalg import FieldMatrix


class GroupRingElement:
    """Element of F[G]; coeffs[i] is the coefficient of the i-th listed element.

    Treated as an immutable value; arithmetic returns new elements.
    """

    __slots__ = ("field", "group", "coeffs")

    def __init__(self, field: Field, group: Group, coeffs):
        if field.add_table is None:
            raise ValueError("group rings need a field with op tables (q <= 256)")
        coeffs = np.asarray(coeffs, dtype=np.uint8)
        if coeffs.shape != (group.order,):
            raise ValueError("coefficient vector length must equal the group order")
        self.field = field
        self.group = group
        self.coeffs = coeffs

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, field, group):
        return cls(field, group, np.zeros(group.order, dtype=np.uint8))

    @classmethod
    def one(cls, field, group):
        c = np.zeros(group.order, dtype=np.uint8)
        c[0] = 1
        return cls(field, group, c)

    @classmethod
    def from_terms(cls, field, group, terms):
        """terms: iterable of (coefficient, group index); repeated indices add."""
        c = np.zeros(group.order, dtype=np.uint8)
        for coeff, idx in terms:
            c[idx] = field.add(int(c[idx]), coeff)
        return cls(field, group, c)

    def _check_context(self, other):
        if self.field != other.field or self.group != other.group:
            raise ValueError("mismatched group-ring contexts")

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        self._check_context(other)
        if self.field.p == 2:
            return GroupRingElement(self.field, self.group, self.coeffs ^ other.coeffs)
        return GroupRingElement(
            self.field, self.group, self.field.add_table[self.coeffs, other.coeffs]
        )

    def __mul__(self, other):
        """Convolution over the group law: (uv)_g = sum_{xy=g} u_x v_y."""
        self._check_context(other)
        f, g = self.field, self.group
        out = np.zeros(g.order, dtype=np.uint8)
        v = other.coeffs
        for i in np.nonzero(self.coeffs)[0]:
            perm = g.mul_perm(int(i))
            term = f.mul_table[self.coeffs[i]][v]
            if f.p == 2:
                out[perm] ^= term
            else:
                out[perm] = f.add_table[out[perm], term]
        return GroupRingElement(f, g, out)

    def scale(self, c: int):
        return GroupRingElement(
            self.field, self.group, self.field.mul_table[c][self.coeffs]
        )

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers not supported")
        result = GroupRingElement.one(self.field, self.group)
        base = self
        while e:
            if e & 1:
                result = result * base
            base2 = base * base if e > 1 else base
            base, e = base2, e >> 1
        return result

    def transpose(self, conjugate: bool = False):
        """Swap coefficients of g and g^-1; optionally conjugate (GF(4) bar)."""
        c = self.coeffs[self.group.inv_perm()]
        if conjugate:
            if self.field.q != 4:
                raise ValueError("conjugate transpose requires GF(4)")
            conj = np.array([0, 1, 3, 2], dtype=np.uint8)
            c = conj[c]
        return GroupRingElement(self.field, self.group, c)

    # -- predicates / measures ----------------------------------------

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def is_bar_symmetric(self) -> bool:
        return self == self.transpose(conjugate=True)

    def support(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElement)
            and self.field == other.field
            and self.group == other.group
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.field, self.group, self.coeffs.tobytes()))

    # -- matrix image --------------------------------------------------

    def to_matrix(self) -> FieldMatrix:
        """The |G|x|G| matrix with (i,j) entry = coefficient of g_i^-1 g_j."""
        g = self.group
        rows = np.empty((g.order, g.order), dtype=np.uint8)
        for i in range(g.order):
            rows[i] = self.coeffs[g.mul_perm(g.inv(i))]
        return FieldMatrix(self.field, rows)

    def rank(self) -> int:
        return self.to_matrix().rank()

    # -- rendering -----------------------------------------------------

    def __str__(self):
        terms = []
        for i in np.nonzero(self.coeffs)[0]:
            name = self.group.name(int(i))
            c = int(self.coeffs[i])
            if c == 1:
                terms.append(name)
            else:
                cs = self.field.element_str(c)
                terms.append(cs if name == "1" else f"{cs}*{name}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"<{self}>"
