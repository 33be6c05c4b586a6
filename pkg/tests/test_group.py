import pytest
from hypothesis import given, strategies as st

from cubewalk.group import (
    GroupElement,
    MalformedInputError,
    WeightFunction,
    hamming_weight,
    odd_overlap_set,
    sigma,
    xor_add,
)

from conftest import PAPER_GRAPHS, weight_functions

g = GroupElement.from_str


@pytest.mark.parametrize(
    "a, b, expected", [("000", "000", "000"), ("001", "011", "010"), ("101", "101", "000")]
)
def test_xor_add(a, b, expected):
    assert str(xor_add(g(a), g(b))) == expected


def test_xor_dimension_mismatch():
    with pytest.raises(MalformedInputError):
        xor_add(g("01"), g("001"))


@pytest.mark.parametrize("x, w", [("000", 0), ("011", 2), ("111", 3)])
def test_hamming_weight(x, w):
    assert hamming_weight(g(x)) == w


def test_encoding_is_big_endian():
    assert g("000").value == 0
    assert g("111").value == 7
    assert g("011").value == 3
    assert str(GroupElement.unit(1, 3)) == "100"
    assert g("100").bit(1) == 1 and g("100").bit(3) == 0


def test_bad_bitstrings():
    for bad in ["", "012", "ab"]:
        with pytest.raises(MalformedInputError):
            g(bad)
    with pytest.raises(MalformedInputError):
        GroupElement(8, 3)


def test_odd_overlap_set_restricted_to_support():
    support = [g("001"), g("011"), g("101")]
    assert odd_overlap_set(g("010"), 3, within=support) == {g("011")}
    assert odd_overlap_set(g("001"), 3, within=support) == set(support)
    assert odd_overlap_set(g("100"), 3, within=support) == {g("101")}


def test_odd_overlap_of_identity_is_empty():
    assert odd_overlap_set(g("000"), 3) == set()


@pytest.mark.parametrize("n", range(1, 7))
def test_odd_overlap_of_unit_has_half_the_group(n):
    for i in range(1, n + 1):
        e = GroupElement.unit(i, n)
        members = odd_overlap_set(e, n)
        assert len(members) == 2 ** (n - 1)
        assert all(y.bit(i) == 1 for y in members)


@pytest.mark.parametrize(
    "name, expected",
    [("weighted1", "101"), ("weighted2", "101"), ("q3", "111"), ("periodic", "00"), ("fig2", "011")],
)
def test_sigma_examples(name, expected):
    assert str(sigma(WeightFunction.from_dict(PAPER_GRAPHS[name]))) == expected


def test_sigma_negative_weights_use_absolute_parity():
    assert str(sigma(WeightFunction.from_dict({"01": -3, "10": -2}))) == "01"


def test_weight_function_rejects_loops_and_non_integers():
    with pytest.raises(MalformedInputError, match="loop"):
        WeightFunction.from_dict({"000": 5})
    with pytest.raises(MalformedInputError):
        WeightFunction.from_dict({"001": 1.5})
    with pytest.raises(MalformedInputError):
        WeightFunction.from_dict({"001": True})


def test_weight_function_drops_zeros_and_sorts():
    f = WeightFunction.from_dict({"110": 2, "001": 0, "010": 1})
    assert [str(x) for x in f.support()] == ["010", "110"]
    assert f.delta == 2
    assert f(g("001")) == 0


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(*[st.integers(0, 2**n - 1)] * 3, st.just(n))))
def test_group_axioms(args):
    a, b, c, n = args
    x, y, z = GroupElement(a, n), GroupElement(b, n), GroupElement(c, n)
    assert (x ^ x).is_identity()
    assert x ^ y == y ^ x
    assert (x ^ y) ^ z == x ^ (y ^ z)


@given(weight_functions())
def test_even_weights_give_zero_sigma(f):
    doubled = WeightFunction(f.n, {x: 2 * w for x, w in f.entries.items()})
    assert sigma(doubled).is_identity()


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(weight_functions(min_n=n, max_n=n), weight_functions(min_n=n, max_n=n))))
def test_sigma_is_linear_mod_2(pair):
    f, h = pair
    assert sigma(f + h) == sigma(f) ^ sigma(h)


@given(weight_functions(max_n=5))
def test_sigma_matches_odd_overlap_definition(f):
    for i in range(1, f.n + 1):
        total = sum(f(y) for y in odd_overlap_set(GroupElement.unit(i, f.n), f.n))
        assert sigma(f).bit(i) == total % 2
