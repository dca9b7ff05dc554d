from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_strips, schur_in_p
from wreathring.errors import InputError
from wreathring.partitions import partitions_of, partitions_up_to
from wreathring.symfunc import (
    SymFunc,
    cauchy_kernel,
    e,
    from_basis,
    from_json,
    h,
    inner_product,
    internal_product,
    multiply,
    p,
    perp,
    s,
    schur_to_p,
    to_json,
)

parts = st.integers(0, 5).flatmap(lambda n: st.sampled_from(partitions_of(n)))
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
elements = st.dictionaries(parts, coeffs, max_size=4)


def zero_one_matrices(rows, cols):
    count = 0
    for cells in product((0, 1), repeat=len(rows) * len(cols)):
        m = [cells[i * len(cols) : (i + 1) * len(cols)] for i in range(len(rows))]
        if [sum(r) for r in m] == list(rows) and [sum(c) for c in zip(*m)] == list(cols):
            count += 1
    return count if rows or cols else 1


def test_schur_in_power_sums():
    assert schur_to_p((1,)) == p((1,))
    assert schur_to_p((1, 1)) == p((1, 1)) * Fraction(1, 2) - p((2,)) * Fraction(1, 2)
    assert s((3,)) == h((3,))


@pytest.mark.parametrize("lam", partitions_up_to(5))
def test_schur_matches_jacobi_trudi(lam):
    assert s(lam).terms == schur_in_p(lam)


def test_products():
    assert multiply(p((2,)), p((1,))) == p((2, 1))
    assert multiply(s((1,)), s((1,))) == s((2,)) + s((1, 1))
    f = s((2, 1)) + p((3,))
    assert multiply(SymFunc.one(), f) == f


def test_inner_products():
    assert inner_product(s((2, 1)), s((2, 1))) == 1
    assert inner_product(p((2,)), p((2,))) == 2
    assert inner_product(s((2,)), s((1, 1))) == 0


@pytest.mark.parametrize("n", range(5))
def test_schur_orthonormal_and_dual_bases(n):
    for a in partitions_of(n):
        for b in partitions_of(n):
            assert inner_product(s(a), s(b)) == (a == b)
            assert inner_product(h(a), e(b)) == zero_one_matrices(a, b)


def test_internal_products():
    f = s((2, 1)) + s((3,)) * 2 + s((1,))
    assert internal_product(s((3,)), f) == f.degree_part(3)
    assert internal_product(p((2,)), p((2,))) == p((2,)) * 2
    assert internal_product(s((1, 1)), s((1, 1))) == s((2,))


def test_perp_examples():
    assert perp(s((1, 1, 1)), "h", 1) == s((1, 1))
    f = s((2, 1)) + p((1,))
    assert perp(f, "h", 0) == f
    assert perp(s((2,)), "e", 2) == SymFunc()
    with pytest.raises(InputError):
        perp(f, "m", 1)


@settings(deadline=None)
@given(st.integers(0, 6).flatmap(lambda n: st.sampled_from(partitions_of(n))), st.integers(0, 3))
def test_perp_is_pieri_adjoint(lam, r):
    for kind, direction in (("h", "horizontal"), ("e", "vertical")):
        want = SymFunc()
        for mu in brute_strips(lam, r, direction):
            want = want + s(mu)
        assert perp(s(lam), kind, r) == want


@pytest.mark.parametrize("lam", partitions_up_to(6))
def test_perp_generating_series_invert(lam):
    up = SymFunc()
    for r in range(sum(lam) + 1):
        up = up + perp(s(lam), "h", r)
    back = SymFunc()
    for r in range(sum(lam) + 1):
        back = back + perp(up, "e", r) * (-1) ** r
    assert back == s(lam)


def test_cauchy_kernel():
    assert cauchy_kernel(0) == [()]
    assert cauchy_kernel(1) == [(), (1,)]
    assert cauchy_kernel(2) == [(), (1,), (2,), (1, 1)]


@settings(deadline=None)
@given(elements, st.sampled_from(["s", "e", "h", "p"]))
def test_basis_round_trip(data, basis):
    f = from_basis("p", data)
    assert from_basis(basis, f.to_basis(basis)) == f


@settings(deadline=None)
@given(elements, st.sampled_from(["s", "e", "h", "p"]))
def test_json_round_trip(data, basis):
    f = from_basis("s", data)
    assert from_json(to_json(f, basis)) == f


def test_bad_json():
    with pytest.raises(InputError):
        from_json('{"basis": "s"}')
    with pytest.raises(InputError):
        from_basis("q", {(1,): 1})


def test_omega_swaps_e_and_h():
    for lam in partitions_up_to(4):
        eh = e(lam).to_basis("h")
        he = h(lam).to_basis("e")
        assert eh == he
