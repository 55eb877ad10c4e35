import numpy as np
import pytest

from grcodes.groups import (
    Cyclic,
    DirectProduct,
    GeneralizedDihedral,
    cyclic_tower,
    dihedral,
)


def brute_associative(g, triples):
    for a, b, c in triples:
        assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


@pytest.fixture(params=["c12", "c4xc2", "d22", "dih_c3c3"])
def group(request):
    return {
        "c12": Cyclic(12),
        "c4xc2": DirectProduct([Cyclic(4, "a"), Cyclic(2, "h")]),
        "d22": dihedral(22),
        "dih_c3c3": GeneralizedDihedral(DirectProduct([Cyclic(3, "a1"), Cyclic(3, "a2")])),
    }[request.param]


def test_group_axioms(group):
    g = group
    assert g.identity_ok()
    rng = np.random.default_rng(7)
    triples = rng.integers(0, g.order, size=(50, 3))
    brute_associative(g, triples)
    for i in range(g.order):
        assert g.mul(i, g.inv(i)) == 0
        assert g.mul(g.inv(i), i) == 0


def test_mul_perm_is_permutation(group):
    g = group
    for i in range(0, g.order, max(1, g.order // 5)):
        perm = g.mul_perm(i)
        assert sorted(perm) == list(range(g.order))


def test_cyclic_listing():
    g = Cyclic(5, "a")
    assert [g.name(i) for i in range(5)] == ["1", "a", "a^2", "a^3", "a^4"]
    assert g.mul(3, 4) == 2
    assert g.inv(2) == 3


def test_direct_product_first_factor_fastest():
    g = DirectProduct([Cyclic(4, "a"), Cyclic(2, "h")])
    # listing: 1, a, a^2, a^3, h, ah, a^2 h, a^3 h
    assert g.name(1) == "a"
    assert g.name(4) == "h"
    assert g.name(5) == "a*h"
    assert g.embed(0, 3) == 3
    assert g.embed(1, 1) == 4
    assert g.split(7) == [3, 1]
    assert g.join([3, 1]) == 7


def test_dihedral_relations():
    g = dihedral(16)  # Dih(C8), b at index 8
    a, b = 1, 8
    # b a b^-1 = a^-1
    assert g.mul(g.mul(b, a), g.inv(b)) == g.inv(a)
    assert g.mul(b, b) == 0
    # all reflections are involutions
    for i in range(8, 16):
        assert g.inv(i) == i
        assert g.mul(i, i) == 0
    assert not g.is_abelian


def test_generalized_dihedral_requires_abelian_base():
    with pytest.raises(ValueError):
        GeneralizedDihedral(dihedral(6))


def test_dihedral_rejects_odd_order():
    with pytest.raises(ValueError):
        dihedral(7)


def test_cyclic_tower_symbols():
    g = cyclic_tower([4, 4, 2])
    assert g.order == 32
    assert g.name(1) == "a1"
    assert g.name(4) == "a2"
    assert g.name(16) == "a3"


def test_group_equality_by_structure():
    assert Cyclic(4) == Cyclic(4)
    assert Cyclic(4) != Cyclic(4, "b")
    assert DirectProduct([Cyclic(4), Cyclic(2)]) == DirectProduct([Cyclic(4), Cyclic(2)])
