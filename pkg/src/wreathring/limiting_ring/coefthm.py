"""X-basis structure constants by coefficient extraction in Schur functions.

The coefficient of X_lam in X_mu X_nu is the coefficient of
prod_U s_{mu(U)}(x^U) prod_V s_{nu(V)}(y^V) in

    prod_{U,V} (sum_rho s_rho(x^U) s_rho(y^V))^{N_{U,V}^1}
        * prod_W s_{lam(W)}(x^W, y^W, z^W),

where z^W is the disjoint union over (V1, V2) of N_{V1,V2}^W copies of the
product alphabet x^{V1} y^{V2}.  Rather than expanding for every candidate
lam, we push s_mu (x) s_nu through the adjoints: skewing for the kernel,
coproducts (splitting an alphabet's Schur function over its destinations),
Kronecker products for product alphabets and Littlewood-Richardson products
for the final unions.  Every lam is read off in one pass.
"""

from fractions import Fraction
from itertools import product

from ..characters import kron, schur_product, skew
from ..groth_ring import RingData
from ..partitions import EMPTY, contains, partitions_of
from .multipartition import Multipartition


def _splits(lam, sizes) -> list:
    """Iterated coproduct of s_lam into len(sizes) pieces of the given sizes."""
    if len(sizes) == 1:
        return [((lam,), 1)] if sum(lam) == sizes[0] else []
    out = []
    for gamma in partitions_of(sizes[0]):
        if not contains(lam, gamma):
            continue
        for delta, c in skew(lam, gamma).items():
            for rest, d in _splits(delta, sizes[1:]):
                out.append(((gamma,) + rest, c * d))
    return out


def _compositions(total, slots):
    if slots == 0:
        if total == 0:
            yield ()
        return
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def _kernel_skew(ring: RingData, xs: dict, ys: dict) -> dict:
    """Apply the adjoint of the truncated Cauchy kernels to s_xs (x) s_ys."""
    state = {(tuple(sorted(xs.items())), tuple(sorted(ys.items()))): 1}
    pairs = [(u, v) for u in range(len(ring.labels)) for v in range(len(ring.labels)) for _ in range(ring.n(u, v, ring.unit))]
    for u, v in pairs:
        new = {}
        for (xk, yk), c in state.items():
            xd, yd = dict(xk), dict(yk)
            a, b = xd.get(u, EMPTY), yd.get(v, EMPTY)
            for r in range(min(sum(a), sum(b)) + 1):
                for rho in partitions_of(r):
                    if not (contains(a, rho) and contains(b, rho)):
                        continue
                    for ga, ca in skew(a, rho).items():
                        for gb, cb in skew(b, rho).items():
                            x2, y2 = dict(xd), dict(yd)
                            x2[u], y2[v] = ga, gb
                            key = (
                                tuple(sorted((k, p) for k, p in x2.items() if p)),
                                tuple(sorted((k, p) for k, p in y2.items() if p)),
                            )
                            new[key] = new.get(key, 0) + c * ca * cb
        state = {k: v for k, v in new.items() if v}
    return state


def _push(ring: RingData, xs: dict, ys: dict) -> dict:
    """Adjoint of f(w^W) -> f(x^W + y^W + z^W) applied to s_xs (x) s_ys."""
    labels = range(len(ring.labels))
    xl = [u for u in labels if xs.get(u)]
    yl = [v for v in labels if ys.get(v)]
    zslots = [(u, v, w) for u in xl for v in yl for w, n in ring.mult(u, v).items() for _ in range(n)]
    result = {}
    # sizes of the z-slots, bounded by the available sizes on both sides
    for zs in _zsizes(zslots, {u: sum(xs[u]) for u in xl}, {v: sum(ys[v]) for v in yl}):
        x_opts = []
        for u in xl:
            mine = [i for i, s in enumerate(zslots) if s[0] == u]
            sizes = [sum(xs[u]) - sum(zs[i] for i in mine)] + [zs[i] for i in mine]
            x_opts.append([(u, mine, parts, c) for parts, c in _splits(xs[u], sizes)])
        y_opts = []
        for v in yl:
            mine = [i for i, s in enumerate(zslots) if s[1] == v]
            sizes = [sum(ys[v]) - sum(zs[i] for i in mine)] + [zs[i] for i in mine]
            y_opts.append([(v, mine, parts, c) for parts, c in _splits(ys[v], sizes)])
        for xchoice in product(*x_opts):
            for ychoice in product(*y_opts):
                coef = 1
                zx = [EMPTY] * len(zslots)
                zy = [EMPTY] * len(zslots)
                into = {}
                for u, mine, parts, c in xchoice:
                    coef *= c
                    into.setdefault(u, []).append({parts[0]: 1})
                    for i, p in zip(mine, parts[1:]):
                        zx[i] = p
                for v, mine, parts, c in ychoice:
                    coef *= c
                    into.setdefault(v, []).append({parts[0]: 1})
                    for i, p in zip(mine, parts[1:]):
                        zy[i] = p
                ok = True
                for i, (_, _, w) in enumerate(zslots):
                    if not zs[i]:
                        continue
                    k = {tau: kron(tau, zx[i], zy[i]) for tau in partitions_of(zs[i])}
                    k = {tau: c for tau, c in k.items() if c}
                    if not k:
                        ok = False
                        break
                    into.setdefault(w, []).append(k)
                if not ok:
                    continue
                per_label = []
                for w, factors in into.items():
                    acc = {EMPTY: 1}
                    for f in factors:
                        acc = _lr_product(acc, f)
                    per_label.append([(w, lam, c) for lam, c in acc.items()])
                for combo in product(*per_label):
                    val = coef
                    for _, _, c in combo:
                        val *= c
                    key = Multipartition({w: lam for w, lam, _ in combo})
                    result[key] = result.get(key, 0) + val
    return result


def _zsizes(zslots, xsz, ysz):
    def rec(i, xl, yl, acc):
        if i == len(zslots):
            yield tuple(acc)
            return
        u, v, _ = zslots[i]
        for s in range(min(xl[u], yl[v]) + 1):
            xl[u] -= s
            yl[v] -= s
            yield from rec(i + 1, xl, yl, acc + [s])
            xl[u] += s
            yl[v] += s

    yield from rec(0, dict(xsz), dict(ysz), [])


def _lr_product(a: dict, b: dict) -> dict:
    out = {}
    for p, x in a.items():
        for q, y in b.items():
            if not p:
                prod = {q: 1}
            elif not q:
                prod = {p: 1}
            else:
                prod = schur_product(*sorted((p, q), reverse=True))
            for lam, c in prod.items():
                out[lam] = out.get(lam, 0) + x * y * c
    return out


def multiply_x_coefthm(ring: RingData, mu, nu) -> dict:
    mu, nu = Multipartition(mu), Multipartition(nu)
    total = {}
    for (xk, yk), c in _kernel_skew(ring, dict(mu), dict(nu)).items():
        for lam, d in _push(ring, dict(xk), dict(yk)).items():
            total[lam] = total.get(lam, 0) + c * d
    return {k: Fraction(v) for k, v in total.items() if v}
