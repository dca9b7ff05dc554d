from fractions import Fraction

import pytest

from wreathring.characters import chi
from wreathring.errors import BudgetExceeded, SizeMismatch
from wreathring.groups import cyclic2, klein_four, symmetric_group, trivial_group
from wreathring.limiting_ring import Multipartition, multiply_x, multipartitions_of
from wreathring.partitions import Partition, partitions_of
from wreathring.wreath_oracle import (
    build_context,
    cycle_indicator_combination,
    decompose,
    induced_power_indicator,
    indicator_checks,
    inner,
    r_character,
    stability_scan,
    tensor_decomposition,
    tensor_multiplicity,
    tf_product_law,
)

TRIV = trivial_group()
Z2 = cyclic2()


def test_context_sizes():
    assert build_context(TRIV, 4).num_classes == 5
    assert build_context(Z2, 2).num_classes == 5
    assert build_context(Z2, 4).order == 384
    with pytest.raises(BudgetExceeded):
        build_context(Z2, 4, budget=100)


def test_group_law():
    ctx = build_context(Z2, 3)
    elems = list(ctx.elements())
    e = ((0, 0, 0), (0, 1, 2))
    for x in elems[:12]:
        assert ctx.mul(x, ctx.inv(x)) == e
        for y in elems[::7]:
            for z in elems[::11]:
                assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))


@pytest.mark.parametrize("n", range(1, 6))
def test_trivial_group_gives_specht_characters(n):
    ctx = build_context(TRIV, n)
    for lam in partitions_of(n):
        vals = r_character(ctx, Multipartition({0: lam}))
        for rep, v in zip(ctx.reps, vals):
            ctype = Partition(sorted((l for l, _ in ctx.cycles(rep)), reverse=True))
            assert v == chi(lam, ctype)


def test_base_cases():
    ctx = build_context(Z2, 1)
    assert r_character(ctx, Multipartition({1: (1,)})) == (1, -1)
    ctx = build_context(Z2, 3)
    assert set(r_character(ctx, Multipartition({0: (3,)}))) == {1}
    with pytest.raises(SizeMismatch):
        r_character(ctx, Multipartition({0: (2,)}))


@pytest.mark.parametrize(
    "group,n", [(TRIV, 4), (Z2, 2), (Z2, 3), (klein_four(), 2), (symmetric_group(3), 2), (symmetric_group(3), 3)]
)
def test_characters_are_irreducible_and_complete(group, n):
    ctx = build_context(group, n)
    labels = multipartitions_of(len(group.labels), n)
    assert len(labels) == ctx.num_classes
    for a in labels:
        for b in labels:
            assert inner(ctx, r_character(ctx, a), r_character(ctx, b)) == (a == b)
    assert sum(r_character(ctx, a)[0] ** 2 for a in labels) == ctx.order


def test_tensor_examples():
    ctx = build_context(TRIV, 4)
    got = tensor_decomposition(ctx, Multipartition({0: (3, 1)}), Multipartition({0: (3, 1)}))
    assert got == {Multipartition({0: lam}): 1 for lam in [(4,), (3, 1), (2, 2), (2, 1, 1)]}
    unit = Multipartition({0: (4,)})
    for nu in multipartitions_of(1, 4):
        assert tensor_multiplicity(ctx, unit, nu, nu) == 1


def test_z2_tensor_matches_limit():
    ring = Z2.ring()
    s1 = Multipartition({1: (1,)})
    ctx = build_context(Z2, 5)
    got = tensor_decomposition(ctx, s1.pad(0, 5), s1.pad(0, 5))
    limit = multiply_x(ring, s1, s1)
    assert {k.unpad(0): v for k, v in got.items()} == limit


def test_decompose_regular_character():
    ctx = build_context(Z2, 2)
    regular = [Fraction(ctx.order) if i == 0 else Fraction(0) for i in range(ctx.num_classes)]
    dec = decompose(ctx, regular)
    assert all(v == r_character(ctx, k)[0] for k, v in dec.items())


def test_scans():
    scan = stability_scan(TRIV, {0: (1,)}, {0: (1,)}, range(3, 9))
    ring = TRIV.ring()
    limit = multiply_x(ring, {0: (1,)}, {0: (1,)})
    assert {lam: v for lam, (_, st, v) in scan.items() if st} == limit
    scan = stability_scan(Z2, {}, {1: (1,)}, range(2, 6))
    assert all(vals == [1] * 4 for vals, _, _ in scan.values())
    for deg1 in [Multipartition({0: (1,)}), Multipartition({1: (1,)})]:
        scan = stability_scan(Z2, deg1, Multipartition({1: (1,)}), range(3, 7))
        limit = multiply_x(Z2.ring(), deg1, Multipartition({1: (1,)}))
        assert all(st for _, st, _ in scan.values())
        assert {lam: v for lam, (_, _, v) in scan.items()} == limit


def test_indicator_identities():
    assert induced_power_indicator(2, 2)[Partition((2, 2))] == 2
    assert all(v == 0 for k, v in induced_power_indicator(2, 2).items() if k != (2, 2))
    assert induced_power_indicator(1, 1) == {Partition((1,)): 1}
    for ctype in [(2, 2), (2, 1, 1), (1, 1, 1, 1)]:
        assert cycle_indicator_combination(4, ctype) == 0
    assert cycle_indicator_combination(4, (4,)) == 1
    assert indicator_checks(6, 5)["ok"]


@pytest.mark.parametrize("group", [TRIV, Z2], ids=["trivial", "z2"])
def test_tf_product_law(group):
    for n in range(1, 5):
        assert tf_product_law(build_context(group, n)) == []
