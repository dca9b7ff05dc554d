"""Brute-force character arithmetic for wreath products G wr S_n.

Elements are pairs ((g_1..g_n), sigma) with sigma a tuple of 0-based images,
multiplied by (a, s)(b, r) = (a_i * b_{s^-1(i)}, s r).  The whole group is
enumerated and conjugacy classes are found as explicit conjugation orbits,
so nothing here relies on the known description of wreath-product classes.
"""

from fractions import Fraction
from itertools import permutations, product
from math import factorial

from .characters import chi
from .errors import BudgetExceeded, SizeMismatch
from .groups import FiniteGroup
from .limiting_ring.multipartition import Multipartition, multipartitions_of
from .partitions import Partition, partitions_of

DEFAULT_BUDGET = 400_000


def _compose(s, r):
    return tuple(s[i] for i in r)


def _inv_perm(s):
    out = [0] * len(s)
    for i, x in enumerate(s):
        out[x] = i
    return tuple(out)


class WreathContext:
    def __init__(self, group: FiniteGroup, n: int, budget: int = DEFAULT_BUDGET):
        order = group.order**n * factorial(n)
        if order > budget:
            raise BudgetExceeded(f"|G|^n n! = {order} exceeds budget {budget}")
        self.group = group
        self.n = n
        self.order = order
        self.ring = group.ring()
        self._tab = group.table
        self._counts = {}
        self._chars = {}
        self._build_classes()

    # group law
    def mul(self, x, y):
        a, s = x
        b, r = y
        sinv = _inv_perm(s)
        tab = self._tab
        return tuple(tab[a[i]][b[sinv[i]]] for i in range(self.n)), _compose(s, r)

    def inv(self, x):
        a, s = x
        sinv = _inv_perm(s)
        ginv = self.group.inverse
        # (a, s)^-1 = (sinv(a^-1), sinv): entry i is a^-1 at s(i)
        return tuple(ginv[a[s[i]]] for i in range(self.n)), sinv

    def elements(self):
        for s in permutations(range(self.n)):
            for a in product(range(self.group.order), repeat=self.n):
                yield a, s

    def _generators(self):
        n, e = self.n, self.group.identity
        ident = tuple(range(n))
        gens = []
        for i in range(n - 1):
            s = list(ident)
            s[i], s[i + 1] = s[i + 1], s[i]
            gens.append(((e,) * n, tuple(s)))
        if n:
            for g in range(self.group.order):
                if g != e:
                    gens.append(((g,) + (e,) * (n - 1), ident))
        return [(t, self.inv(t)) for t in gens]

    def _build_classes(self):
        gens = self._generators()
        class_of = {}
        reps = []
        sizes = []
        for x in self.elements():
            if x in class_of:
                continue
            idx = len(reps)
            class_of[x] = idx
            stack = [x]
            count = 1
            while stack:
                y = stack.pop()
                for t, ti in gens:
                    z = self.mul(self.mul(t, y), ti)
                    if z not in class_of:
                        class_of[z] = idx
                        count += 1
                        stack.append(z)
            reps.append(x)
            sizes.append(count)
        assert sum(sizes) == self.order
        self.class_of = class_of
        self.reps = reps
        self.sizes = sizes

    @property
    def num_classes(self) -> int:
        return len(self.reps)

    # cycle data
    def cycles(self, x, positions=None):
        """(length, G-class of cycle product) for each cycle of sigma inside `positions`."""
        a, s = x
        sinv = _inv_perm(s)
        tab = self._tab
        cls = self.group.class_of
        seen = set()
        out = []
        for i in positions if positions is not None else range(self.n):
            if i in seen:
                continue
            prod = a[i]
            seen.add(i)
            j = sinv[i]
            length = 1
            while j != i:
                prod = tab[prod][a[j]]
                seen.add(j)
                j = sinv[j]
                length += 1
            out.append((length, cls[prod]))
        return tuple(sorted(out, reverse=True))

    def block_layout(self, lam: Multipartition) -> tuple:
        """Blocks as (label, partition, start), smaller blocks first (ties by label)."""
        items = sorted(lam, key=lambda it: (sum(it[1]), it[0]))
        out = []
        pos = 0
        for u, p in items:
            out.append((u, p, pos))
            pos += sum(p)
        return tuple(out)

    def _layout_counts(self, sizes: tuple) -> dict:
        """For the Young-type subgroup G^n x prod S_b: counts of (W-class, per-block cycle data)."""
        hit = self._counts.get(sizes)
        if hit is not None:
            return hit
        starts = []
        pos = 0
        for b in sizes:
            starts.append(pos)
            pos += b
        block_perms = [list(permutations(range(st, st + b))) for st, b in zip(starts, sizes)]
        counts = {}
        for parts in product(*block_perms):
            s = tuple(x for p in parts for x in p)
            for a in product(range(self.group.order), repeat=self.n):
                x = (a, s)
                key = (self.class_of[x], tuple(self.cycles(x, range(st, st + b)) for st, b in zip(starts, sizes)))
                counts[key] = counts.get(key, 0) + 1
        self._counts[sizes] = counts
        return counts

    def _block_value(self, u: int, p: Partition, cyc) -> Fraction:
        val = Fraction(chi(p, Partition(sorted((l for l, _ in cyc), reverse=True))))
        if not val:
            return val
        for _, c in cyc:
            val *= self.group.chars[u][c]
        return val


def build_context(group: FiniteGroup, n: int, budget: int = DEFAULT_BUDGET) -> WreathContext:
    return WreathContext(group, n, budget)


def r_character(ctx: WreathContext, lam) -> tuple:
    """Character of R_lam, one value per conjugacy class of ctx."""
    lam = Multipartition(lam)
    if lam.size() != ctx.n:
        raise SizeMismatch(f"|{lam}| = {lam.size()} but rank is {ctx.n}")
    hit = ctx._chars.get(lam)
    if hit is not None:
        return hit
    layout = ctx.block_layout(lam)
    if len(layout) <= 1:
        # the subgroup is the whole group: no induction needed
        if layout:
            u, p, _ = layout[0]
            vals = tuple(ctx._block_value(u, p, ctx.cycles(x)) for x in ctx.reps)
        else:
            vals = (Fraction(1),) * ctx.num_classes
    else:
        sizes = tuple(sum(p) for _, p, _ in layout)
        h_order = ctx.group.order**ctx.n
        for b in sizes:
            h_order *= factorial(b)
        acc = [Fraction(0)] * ctx.num_classes
        for (c, cyc), count in ctx._layout_counts(sizes).items():
            v = Fraction(count)
            for (u, p, _), bc in zip(layout, cyc):
                v *= ctx._block_value(u, p, bc)
                if not v:
                    break
            acc[c] += v
        vals = tuple(acc[c] * ctx.order / (h_order * ctx.sizes[c]) for c in range(ctx.num_classes))
    ctx._chars[lam] = vals
    return vals


def inner(ctx: WreathContext, f, g) -> Fraction:
    # rational characters, so no conjugation is needed
    return sum((s * x * y for s, x, y in zip(ctx.sizes, f, g)), Fraction(0)) / ctx.order


def tensor_multiplicity(ctx: WreathContext, mu, nu, lam) -> int:
    prod = [x * y for x, y in zip(r_character(ctx, mu), r_character(ctx, nu))]
    val = inner(ctx, prod, r_character(ctx, lam))
    if val.denominator != 1 or val < 0:
        raise ArithmeticError(f"multiplicity {val} is not a nonnegative integer")
    return int(val)


def decompose(ctx: WreathContext, f) -> dict:
    """Multiplicities of every irreducible R_lam, |lam| = n, in the class function f."""
    out = {}
    for lam in multipartitions_of(len(ctx.group.labels), ctx.n):
        val = inner(ctx, f, r_character(ctx, lam))
        if val:
            out[lam] = val
    return out


def tensor_decomposition(ctx: WreathContext, mu, nu) -> dict:
    prod = [x * y for x, y in zip(r_character(ctx, mu), r_character(ctx, nu))]
    return decompose(ctx, prod)


_CONTEXTS = {}


def cached_context(group: FiniteGroup, n: int, budget: int = DEFAULT_BUDGET) -> WreathContext:
    key = (group.name, group.elements, group.table, n)
    ctx = _CONTEXTS.get(key)
    if ctx is None:
        ctx = WreathContext(group, n, budget)
        _CONTEXTS[key] = ctx
    return ctx


def stability_scan(group: FiniteGroup, mu, nu, n_range, budget: int = DEFAULT_BUDGET, run: int = 3) -> dict:
    """c^lam_{mu,nu}(n) for each n, indexed by the unpadded lam.

    Returns {lam: (values, stabilized, stable value)}; values hold None where
    lam[n] (or mu[n], nu[n]) is undefined.  A sequence counts as stabilized
    when its last `run` values at consecutive n are defined and equal.
    """
    unit = group.ring().unit
    mu, nu = Multipartition(mu), Multipartition(nu)
    ns = list(n_range)
    per_n = {}
    for n in ns:
        if not (mu.pad_defined(unit, n) and nu.pad_defined(unit, n)):
            continue
        ctx = cached_context(group, n, budget)
        dec = tensor_decomposition(ctx, mu.pad(unit, n), nu.pad(unit, n))
        per_n[n] = {k.unpad(unit): int(v) for k, v in dec.items()}
    seen = set()
    for d in per_n.values():
        seen.update(d)
    out = {}
    for lam in seen:
        vals = []
        for n in ns:
            if n in per_n and lam.pad_defined(unit, n):
                vals.append(per_n[n].get(lam, 0))
            else:
                vals.append(None)
        tail = vals[-run:]
        stable = len(tail) == run and None not in tail and len(set(tail)) == 1
        out[lam] = (vals, stable, tail[-1] if stable else None)
    return out


# T^f class functions


def tf_character(ctx: WreathContext, obj: dict) -> tuple:
    """Class function of T_n^f(M) = (1/n) sum_lam chi^lam_(n) [M^{boxtimes n} (x) S^lam] for a virtual M."""
    n = ctx.n
    chars = ctx.group.chars
    vals = []
    for x in ctx.reps:
        cyc = ctx.cycles(x)
        base = Fraction(1)
        for _, c in cyc:
            base *= sum((coef * chars[u][c] for u, coef in obj.items()), Fraction(0))
        ctype = Partition(sorted((l for l, _ in cyc), reverse=True))
        weight = sum((chi(lam, (n,)) * chi(lam, ctype) for lam in partitions_of(n)), 0)
        vals.append(base * Fraction(weight, n))
    return tuple(vals)


def tf_product_law(ctx: WreathContext) -> list:
    """Label pairs where T^f(U)T^f(V) != T^f(U (x) V) pointwise, plus additivity failures."""
    ring = ctx.ring
    k = len(ring.labels)
    single = [tf_character(ctx, {u: 1}) for u in range(k)]
    bad = []
    for u in range(k):
        for v in range(k):
            lhs = tuple(a * b for a, b in zip(single[u], single[v]))
            rhs = tf_character(ctx, ring.product({u: 1}, {v: 1}))
            if lhs != rhs:
                bad.append(("product", ring.labels[u], ring.labels[v]))
            added = tf_character(ctx, {u: 1, v: 1} if u != v else {u: 2})
            if added != tuple(a + b for a, b in zip(single[u], single[v])):
                bad.append(("additivity", ring.labels[u], ring.labels[v]))
    return bad


# S_n-level identities (trivial G)


def _cycle_type(s) -> Partition:
    seen = set()
    out = []
    for i in range(len(s)):
        if i in seen:
            continue
        j, l = i, 0
        while j not in seen:
            seen.add(j)
            j = s[j]
            l += 1
        out.append(l)
    return Partition(sorted(out, reverse=True))


def _young_elements(sizes):
    starts = []
    pos = 0
    for b in sizes:
        starts.append(pos)
        pos += b
    for parts in product(*(permutations(range(st, st + b)) for st, b in zip(starts, sizes))):
        yield tuple(x for p in parts for x in p), parts


def induced_power_indicator(n: int, m: int) -> dict:
    """Ind from S_n^m to S_{nm} of the m-fold product of the n-cycle indicator, by cycle type."""
    total = n * m
    h_order = factorial(n) ** m
    acc = {}
    for s, parts in _young_elements((n,) * m):
        val = 1
        for k, p in enumerate(parts):
            local = tuple(x - k * n for x in p)
            if _cycle_type(local) != Partition((n,)):
                val = 0
                break
        if val:
            ct = _cycle_type(s)
            acc[ct] = acc.get(ct, 0) + val
    from .partitions import z_lambda

    return {lam: Fraction(z_lambda(lam) * acc.get(lam, 0), h_order) for lam in partitions_of(total)}


def cycle_indicator_combination(n: int, ctype) -> Fraction:
    """sum_lam (chi^lam_(n)/n) chi^lam at the given cycle type."""
    return Fraction(sum(chi(lam, (n,)) * chi(lam, ctype) for lam in partitions_of(n)), n)


def indicator_checks(max_nm: int = 8, max_n: int = 6) -> dict:
    """Report for the two S_n identities; every entry True means the checks passed."""
    report = {"induction": {}, "restriction": {}}
    for n in range(1, max_nm + 1):
        for m in range(1, max_nm // n + 1):
            got = induced_power_indicator(n, m)
            want = {lam: Fraction(factorial(m) if lam == Partition((n,) * m) else 0) for lam in got}
            report["induction"][(n, m)] = got == want
    for n in range(1, max_n + 1):
        for alpha in partitions_of(n):
            if len(alpha) < 2:
                continue
            types = {_cycle_type(s) for s, _ in _young_elements(tuple(alpha))}
            report["restriction"][(n, alpha)] = all(cycle_indicator_combination(n, ct) == 0 for ct in types)
    report["ok"] = all(report["induction"].values()) and all(report["restriction"].values())
    return report
