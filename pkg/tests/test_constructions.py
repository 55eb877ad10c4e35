import numpy as np
import pytest

from grcodes.constructions import (
    ConstructionError,
    FamilySpec,
    build_element,
    check_element,
    claimed_params,
    diffset_char2_check,
    diffset_element,
    family_profile,
    parse_spec,
    qr_difference_set,
    witness_codeword,
)
from grcodes.fields import GF2
from grcodes.groupring import GroupRingElement


# -- spec parsing -----------------------------------------------------------


def test_parse_spec_grammar():
    s = parse_spec("class1:m=2,n=1")
    assert (s.family, s.m, s.n) == ("class1", 2, 1)
    assert parse_spec("dihedralqr:q=19").q == 19
    assert parse_spec("gendihedral:q=11,t=2").t == 2
    assert str(parse_spec("class1:m=1,n=2")) == "class1:m=1,n=2"
    assert str(parse_spec("dc34:m=3")) == "dc34:m=3"


def test_parse_spec_roundtrip():
    for text in ["class1:m=2", "gf4dc34:m=1", "dihedralqr:q=27",
                 "gendihedral:q=11,t=2", "general2t:t=2,m=1", "dc34b:m=1,n=2"]:
        assert parse_spec(str(parse_spec(text))) == parse_spec(text)


def test_parse_spec_rejects_garbage():
    with pytest.raises(ValueError):
        parse_spec("nosuchfamily:m=1")
    with pytest.raises(ValueError):
        parse_spec("class1:z=3")
    with pytest.raises(ValueError):
        parse_spec("dihedralqr:q=13")   # 13 = 5 mod 8
    with pytest.raises(ValueError):
        parse_spec("dihedralqr:q=15")   # not a prime power
    with pytest.raises(ValueError):
        parse_spec("gendihedral:q=27,t=2")  # prime required
    with pytest.raises(ValueError):
        parse_spec("dihedralqr:q=11,n=2")   # no intertwining here


# -- difference sets --------------------------------------------------------


@pytest.mark.parametrize("q", [7, 11, 19, 23, 27])
def test_qr_difference_set_params(q):
    ds = qr_difference_set(q)
    assert (ds.v, ds.k, ds.lam) == (q, (q - 1) // 2, (q - 3) // 4)
    # the constructor verifies the lambda count; double-check the set size
    assert len(ds.elements) == ds.k
    assert 0 not in ds.elements


@pytest.mark.parametrize("q,expected", [(7, False), (11, True), (19, True),
                                        (23, False), (27, True)])
def test_char2_check_iff_lambda_even_and_size_odd(q, expected):
    ds = qr_difference_set(q)
    assert diffset_char2_check(ds) is expected
    assert expected == (ds.lam % 2 == 0 and ds.k % 2 == 1)


def test_qr_set_prime_case_matches_squares_mod_q():
    ds = qr_difference_set(11)
    assert set(ds.elements) == {pow(x, 2, 11) for x in range(1, 11)}


def test_diffset_transpose_product_identity():
    ds = qr_difference_set(19)
    d = diffset_element(ds)
    assert d.transpose() * d == GroupRingElement.one(GF2, ds.group)


# -- generator elements -----------------------------------------------------


CONTRACT_INSTANCES = [
    "class1:m=1", "class1:m=2", "class1:m=1,n=2",
    "class2:m=1", "class2:m=2,n=2",
    "dc34:m=1", "dc34:m=2", "dc34:m=1,n=2",
    "dc34b:m=1", "dc78:m=1",
    "general2t:t=1,m=1", "general2t:t=2,m=1", "general2t:t=3,m=1",
    "gf4selfdual:m=1", "gf4selfdual:m=2",
    "gf4dc34:m=1", "gf4dc34:m=2", "gf4dc78:m=1",
    "dualofdc34:m=1", "dualofdc34:m=2",
    "dihedralqr:q=11", "dihedralqr:q=19", "dihedralqr:q=27",
    "gendihedral:q=11,t=1", "gendihedral:q=11,t=2",
]


@pytest.mark.parametrize("text", CONTRACT_INSTANCES)
def test_build_element_contract(text):
    # build_element itself enforces nilpotency/symmetry/rank; assert the
    # headline numbers independently here
    spec = parse_spec(text)
    built = build_element(spec)
    prof = family_profile(spec)
    v = built.element
    assert (v ** prof["nilpotency"]).is_zero()
    assert built.rank == prof["rank"]
    claim = claimed_params(spec)
    assert built.group.order == claim.n
    assert prof["rank"] == claim.k


@pytest.mark.parametrize("text", ["class1:m=1", "dc34:m=1", "dc78:m=1",
                                  "dc34b:m=1", "gf4dc34:m=1", "dualofdc34:m=1",
                                  "dihedralqr:q=11"])
def test_check_element_rank(text):
    spec = parse_spec(text)
    built = build_element(spec)
    chk = check_element(spec, built)
    assert chk.rank() == built.group.order - family_profile(spec)["rank"]
    # check element annihilates the generator element
    assert (built.element * chk).is_zero()


def test_class1_element_shape():
    built = build_element(parse_spec("class1:m=1"))
    assert str(built.element) == "1 + a1*h + a1^2*h + a1^3*h"
    assert built.element.is_symmetric()


def test_gf4selfdual_element_uses_omega():
    built = build_element(parse_spec("gf4selfdual:m=1"))
    assert str(built.element) == "1 + w*a1*h + a1^2*h + w*a1^3*h"


def test_dualofdc34_is_cube():
    built = build_element(parse_spec("dualofdc34:m=1"))
    assert built.element == built.u ** 3
    assert built.element.rank() == 4


def test_intertwined_element_restricts_to_base():
    # stretch-n element lives on exponent multiples of n and reproduces n=1
    for text, base_text in [("class1:m=1,n=2", "class1:m=1"),
                            ("class2:m=1,n=2", "class2:m=1"),
                            ("dc34:m=1,n=2", "dc34:m=1")]:
        big = build_element(parse_spec(text))
        small = build_element(parse_spec(base_text))
        n = 2
        r_small = small.group.factors[0].order
        coeffs = big.element.coeffs.reshape(2, -1)  # h-blocks x base group
        base = np.zeros_like(small.element.coeffs).reshape(2, -1)
        for h in range(2):
            block = coeffs[h].reshape(-1)
            nz = np.nonzero(block)[0]
            assert all(i % n == 0 for i in nz)
            base[h][[i // n for i in nz]] = block[nz]
        assert np.array_equal(base.reshape(-1), small.element.coeffs)


def test_group_order_cap():
    with pytest.raises(ValueError):
        build_element(FamilySpec("class1", m=9))


# -- claimed parameters -----------------------------------------------------


def test_claimed_params_tables():
    assert claimed_params(parse_spec("class1:m=1")).as_tuple() == (8, 4, 4)
    assert claimed_params(parse_spec("class1:m=2")).as_tuple() == (32, 16, 6)
    assert claimed_params(parse_spec("class1:m=3")).as_tuple() == (128, 64, 12)
    assert claimed_params(parse_spec("class1:m=4")).as_tuple() == (512, 256, 18)
    assert claimed_params(parse_spec("class2:m=2")).as_tuple() == (72, 36, 8)
    assert claimed_params(parse_spec("dc34:m=2")).as_tuple() == (128, 96, 4)
    assert claimed_params(parse_spec("dc34b:m=1")).as_tuple() == (32, 24, 4)
    assert claimed_params(parse_spec("dc78:m=1")).as_tuple() == (32, 28, 2)
    assert claimed_params(parse_spec("dualofdc34:m=1")).as_tuple() == (16, 4, 8)
    assert claimed_params(parse_spec("dualofdc34:m=2")).as_tuple() == (128, 32, 24)
    assert claimed_params(parse_spec("gf4selfdual:m=2")).as_tuple() == (32, 16, 8)
    assert claimed_params(parse_spec("gf4dc34:m=1")).as_tuple() == (8, 6, 2)
    assert claimed_params(parse_spec("gf4dc78:m=1")).as_tuple() == (16, 14, 2)
    assert claimed_params(parse_spec("dihedralqr:q=11")).as_tuple() == (22, 11, 6)
    assert claimed_params(parse_spec("dihedralqr:q=27")).as_tuple() == (54, 27, 10)


def test_conjectured_statuses():
    assert claimed_params(parse_spec("dihedralqr:q=11")).status == "conjectured"
    assert claimed_params(parse_spec("general2t:t=2,m=1")).status == "conjectured"
    assert claimed_params(parse_spec("class1:m=2")).status == "proven"


# -- witness codewords ------------------------------------------------------


def convolve(field, group, s, u):
    """Independent convolution oracle for witness-example checks."""
    out = np.zeros(group.order, dtype=np.uint8)
    for i in np.nonzero(s.coeffs)[0]:
        for j in np.nonzero(u.coeffs)[0]:
            k = group.mul(int(i), int(j))
            out[k] = field.add(int(out[k]),
                               field.mul(int(s.coeffs[i]), int(u.coeffs[j])))
    return int(np.count_nonzero(out))


def test_witness_example_class1_m2():
    # s = (a2 + a2^2 + a2^3) gives a weight-6 codeword
    built = build_element(parse_spec("class1:m=2"))
    g = built.group
    s = GroupRingElement.from_terms(GF2, g, [(1, 4), (1, 8), (1, 12)])
    assert convolve(GF2, g, s, built.element) == 6
    assert witness_codeword(parse_spec("class1:m=2"), built).support() == 6


def test_witness_example_class2_m2():
    # s = (1+a1)(1+a2) gives a weight-8 codeword
    built = build_element(parse_spec("class2:m=2"))
    g = built.group
    one_a1 = GroupRingElement.from_terms(GF2, g, [(1, 0), (1, 1)])
    one_a2 = GroupRingElement.from_terms(GF2, g, [(1, 0), (1, 6)])
    s = one_a1 * one_a2
    assert convolve(GF2, g, s, built.element) == 8
    assert witness_codeword(parse_spec("class2:m=2"), built).support() == 8


def test_witness_example_dc34_m1():
    # s = u1 + h gives the weight-2 codeword h(a^2 + a^6)
    built = build_element(parse_spec("dc34:m=1"))
    g = built.group
    s = built.u_m + GroupRingElement.from_terms(GF2, g, [(1, 8)])
    assert convolve(GF2, g, s, built.element) == 2
    c = s * built.element
    assert str(c) == "a1^2*h + a1^6*h"


@pytest.mark.parametrize("text,weight", [
    ("class1:m=1", 4), ("class1:m=3", 12), ("class1:m=4", 18),
    ("class2:m=1", 4), ("dc34:m=2", 4), ("dc34b:m=1", 4), ("dc34b:m=2", 8),
    ("dc78:m=1", 2), ("dc78:m=2", 4),
    ("gf4dc34:m=1", 2), ("gf4dc78:m=1", 2),
    ("dualofdc34:m=1", 8), ("dualofdc34:m=2", 24),
])
def test_witness_matches_claim(text, weight):
    spec = parse_spec(text)
    built = build_element(spec)
    w = witness_codeword(spec, built)
    assert w.support() == weight == claimed_params(spec).d
    # witness is a genuine codeword: annihilated by the check element
    chk = check_element(spec, built)
    assert (w * chk).is_zero()


def test_gf4_claims_refuted_by_light_codewords():
    # For the GF(4) tower families with m >= 2 the structured search finds
    # codewords strictly lighter than the claimed distances: the square of
    # the generator element collapses because the factor squares are units.
    spec = parse_spec("gf4dc34:m=2")
    built = build_element(spec)
    u2 = built.element * built.element
    assert u2.support() == 2  # 1 + a1^2 a2^2
    assert witness_codeword(spec, built).support() == 2 < claimed_params(spec).d

    spec = parse_spec("gf4selfdual:m=2")
    built = build_element(spec)
    w = witness_codeword(spec, built)
    assert w.support() == 6 < claimed_params(spec).d
    # the light codeword is f2 * u = f2 + h f1, since f2^2 = 1
    g = built.group
    f2 = GroupRingElement.from_terms(built.element.field, g,
                                     [(2, 4), (1, 8), (2, 12)])
    assert (f2 * f2) == GroupRingElement.one(built.element.field, g)
    assert (f2 * built.element).support() == 6
