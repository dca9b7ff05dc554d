import pytest
from hypothesis import given, settings, strategies as st

from wreathring.errors import InputError, NoncommutativeRing, UndefinedPad
from wreathring.groth_ring import cyclic_group, group_grading, vect
from wreathring.groups import symmetric_group
from wreathring.limiting_ring import (
    EMPTY_MP,
    GElement,
    Multipartition,
    basic_hook,
    char_basis,
    char_basis_eval,
    evaluate_hooks,
    hooks_expand,
    induced_limit,
    mp,
    multiply_x,
    multipartitions_of,
    multipartitions_up_to,
    pbw_normalize,
    phi_p,
    t,
    t_from_phi,
    t_multi,
    t_to_x,
    x_to_t,
)

VECT = vect()
Z2 = cyclic_group(2)
Z3 = cyclic_group(3)
S3 = symmetric_group(3)
REP_S3 = S3.ring()
VEC_S3 = group_grading(S3.elements, [[S3.elements[x] for x in row] for row in S3.table])
RINGS = {"vect": VECT, "z2": Z2, "z3": Z3, "reps3": REP_S3, "vecs3": VEC_S3}


def X(ring, data):
    return mp(ring, data)


def one(ring, *pairs):
    return {X(ring, d): c for d, c in pairs}


def small_mps(ring, d):
    return st.sampled_from(multipartitions_up_to(len(ring.labels), d))


def test_multipartition_basics():
    lam = X(Z2, {"1": [2], "s": [1]})
    assert lam.size() == 3
    assert lam.pad(Z2.unit, 6) == X(Z2, {"1": [3, 2], "s": [1]})
    assert lam.pad(Z2.unit, 6).unpad(Z2.unit) == lam
    with pytest.raises(UndefinedPad):
        lam.pad(Z2.unit, 4)
    assert X(Z2, '{"s":[1,1]}') == Multipartition({1: (1, 1)})
    with pytest.raises(InputError):
        X(Z2, {"t": [1]})
    assert len(multipartitions_of(2, 2)) == 5


def test_x_to_t_and_back():
    assert x_to_t(VECT, {}) == GElement.one(VECT)
    x1 = x_to_t(VECT, {0: (1,)})
    assert x1 == t(VECT, 1, 0) - 1
    assert t_to_x(VECT, t(VECT, 1, 0)) == one(VECT, ({"1": [1]}, 1), ({}, 1))
    sq = t(VECT, 1, 0) * t(VECT, 1, 0)
    assert t_to_x(VECT, sq) == one(VECT, ({"1": [2]}, 1), ({"1": [1, 1]}, 1), ({"1": [1]}, 3), ({}, 2))


def test_off_unit_x_is_the_induced_limit():
    lam = X(Z2, {"s": [2, 1]})
    assert x_to_t(Z2, lam) == induced_limit(Z2, lam)
    assert induced_limit(Z2, EMPTY_MP) == GElement.one(Z2)


@pytest.mark.parametrize("r", range(1, 6))
def test_exterior_power_limit(r):
    got = t_to_x(VECT, induced_limit(VECT, {0: (1,) * r}))
    assert got == {Multipartition({0: (1,) * r}): 1, Multipartition({0: (1,) * (r - 1)}): 1}


def test_products_examples():
    assert multiply_x(VECT, {0: (1,)}, {0: (1,)}) == one(VECT, ({}, 1), ({"1": [1]}, 1), ({"1": [2]}, 1), ({"1": [1, 1]}, 1))
    want = one(Z2, ({}, 1), ({"1": [1]}, 1), ({"s": [2]}, 1), ({"s": [1, 1]}, 1))
    for method in ("t", "coefthm"):
        assert multiply_x(Z2, X(Z2, {"s": [1]}), X(Z2, {"s": [1]}), method) == want
    with pytest.raises(InputError):
        multiply_x(Z2, EMPTY_MP, EMPTY_MP, "other")


def test_vec_s3_is_noncommutative():
    g, h = "132", "213"
    gh = S3.elements[S3.table[S3.elements.index(g)][S3.elements.index(h)]]
    got = multiply_x(VEC_S3, X(VEC_S3, {g: [1]}), X(VEC_S3, {h: [1]}))
    assert got == one(VEC_S3, ({gh: [1]}, 1), ({g: [1], h: [1]}, 1))
    assert got != multiply_x(VEC_S3, X(VEC_S3, {h: [1]}), X(VEC_S3, {g: [1]}))


def test_pbw_examples():
    r = VEC_S3
    g, h = r.index("132"), r.index("213")
    assert pbw_normalize(r, [(2, h), (1, g)]) == pbw_normalize(r, [(1, g), (2, h)])
    lhs = pbw_normalize(r, [(1, h), (1, g)])
    gh, hg = r.mult(g, h), r.mult(h, g)
    want = pbw_normalize(r, [(1, g), (1, h)]) + t(r, 1, hg) - t(r, 1, gh)
    assert lhs == want
    for u in range(3):
        for v in range(3):
            assert pbw_normalize(Z3, [(1, u), (1, v)]) == pbw_normalize(Z3, [(1, v), (1, u)])


@pytest.mark.parametrize("name", sorted(RINGS))
def test_t_multi_identities(name):
    r = RINGS[name]
    k = len(r.labels)
    for a in range(k):
        assert t_multi(r, 2, [a]) == t(r, 2, a)
        assert t_multi(r, 1, [a, a]) == t(r, 1, a) * t(r, 1, a) - t(r, 1, r.mult(a, a))
    for b in range(k):
        for a1 in range(k):
            for a2 in range(k):
                diff = (
                    t(r, 1, b) * t_multi(r, 1, [a1, a2])
                    - t_multi(r, 1, [b, a1, a2])
                    - t_multi(r, 1, [r.mult(b, a1), a2])
                    - t_multi(r, 1, [a1, r.mult(b, a2)])
                )
                assert not diff


@pytest.mark.parametrize("name", sorted(RINGS))
def test_phi_and_moebius(name):
    r = RINGS[name]
    for u in range(len(r.labels)):
        assert phi_p(r, u, 1) == t(r, 1, u)
        assert phi_p(r, u, 2) == t(r, 1, r.power({u: 1}, 2)) + t(r, 2, u) * 2
        for k in range(1, 7):
            assert t_from_phi(r, u, k) == t(r, k, u)
    assert phi_p(VECT, 0, 6) == t(VECT, 1, 0) + t(VECT, 2, 0) * 2 + t(VECT, 3, 0) * 3 + t(VECT, 6, 0) * 6


def test_basic_hooks():
    assert basic_hook(Z2, 1, 1) == t(Z2, 1, 1)
    assert basic_hook(Z2, 1, 0) == GElement.one(Z2)
    assert hooks_expand(Z3, basic_hook(Z3, 2, 3)) == {((3, 2),): 1}
    assert hooks_expand(VECT, x_to_t(VECT, {0: (1,)})) == {((1, 0),): 1}
    g = x_to_t(VECT, {0: (2,)})
    assert evaluate_hooks(VECT, hooks_expand(VECT, g)) == g
    with pytest.raises(NoncommutativeRing):
        hooks_expand(VEC_S3, t(VEC_S3, 1, 1))


@pytest.mark.parametrize("name", ["vect", "z2", "z3", "reps3"])
def test_hooks_round_trip(name):
    r = RINGS[name]
    for lam in multipartitions_up_to(len(r.labels), 3):
        g = x_to_t(r, lam)
        assert evaluate_hooks(r, hooks_expand(r, g)) == g


def test_char_basis():
    assert char_basis(()) == {(): 1}
    assert char_basis((1,)) == {(1,): 1, (): -1}
    assert char_basis((1, 1)) == {(2,): 1, (1,): -1, (): 1}
    for n in range(1, 7):
        for mu in [(n,), (1,) * n]:
            fixed = mu.count(1)
            assert char_basis_eval(char_basis((1,)), n, mu) == fixed - 1


@pytest.mark.parametrize("name", sorted(RINGS))
def test_round_trip_degree_three(name):
    r = RINGS[name]
    for lam in multipartitions_up_to(len(r.labels), 3):
        assert t_to_x(r, x_to_t(r, lam)) == {lam: 1}


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(sorted(RINGS)), st.data())
def test_paths_agree_and_unit(name, data):
    r = RINGS[name]
    mu = data.draw(small_mps(r, 2))
    nu = data.draw(small_mps(r, 2))
    a = multiply_x(r, mu, nu, "t")
    assert a == multiply_x(r, mu, nu, "coefthm")
    assert all(v > 0 and v.denominator == 1 for v in a.values())
    assert multiply_x(r, EMPTY_MP, mu) == {mu: 1}


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["z2", "vecs3"]), st.data())
def test_product_is_associative(name, data):
    r = RINGS[name]
    a, b, c = (data.draw(small_mps(r, 1)) for _ in range(3))

    def times(left, right_mp):
        out = {}
        for k, v in left.items():
            for w, x in multiply_x(r, k, right_mp).items():
                out[w] = out.get(w, 0) + v * x
        return out

    lhs = times(multiply_x(r, a, b), c)
    bc = multiply_x(r, b, c)
    rhs = {}
    for k, v in bc.items():
        for w, x in multiply_x(r, a, k).items():
            rhs[w] = rhs.get(w, 0) + v * x
    assert {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}


def test_top_degree_is_the_graded_product():
    prod = multiply_x(Z3, X(Z3, {"g": [2]}), X(Z3, {"g^2": [1, 1]}))
    assert {k: v for k, v in prod.items() if k.size() == 4} == {X(Z3, {"g": [2], "g^2": [1, 1]}): 1}
    prod = multiply_x(VECT, X(VECT, {"1": [1]}), X(VECT, {"1": [1, 1]}))
    assert {k: v for k, v in prod.items() if k.size() == 3} == one(VECT, ({"1": [2, 1]}, 1), ({"1": [1, 1, 1]}, 1))
