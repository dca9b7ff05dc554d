"""Multi-argument T elements, the X basis, and conversions between X and T."""

from collections import Counter
from fractions import Fraction
from itertools import permutations, product
from math import factorial

from ..characters import chi
from ..groth_ring import RingData, ring_cache
from ..partitions import Partition, eps_lambda, partitions_of, strips, z_lambda
from .multipartition import Multipartition
from .pbw import GElement, mono_degree, normal_word, t


def _freeze(obj) -> tuple:
    if isinstance(obj, int):
        obj = {obj: 1}
    return tuple(sorted((u, Fraction(c)) for u, c in obj.items() if c))


def t_multi(ring: RingData, m: int, args) -> GElement:
    """T_m(a_1, ..., a_n) for a multiset of virtual objects.

    Sum over orderings and over partitions lam of n of eps/z times the
    product of T_m applied to consecutive runs of arguments of lengths lam.
    """
    keys = tuple(sorted(_freeze(a) for a in args))
    cache = ring_cache(ring, "tmulti")
    hit = cache.get((m, keys))
    if hit is not None:
        return hit
    n = len(keys)
    if n == 0:
        return GElement.one(ring)
    weight = 1
    for c in Counter(keys).values():
        weight *= factorial(c)
    objs = {k: dict(k) for k in keys}
    # all factors sit at level m, so collect raw words of labels first
    words = {}
    for seq in set(permutations(keys)):
        for lam in partitions_of(n):
            coef = Fraction(eps_lambda(lam) * weight, z_lambda(lam))
            partial = {(): coef}
            pos = 0
            for part in lam:
                prod = objs[seq[pos]]
                for j in range(1, part):
                    prod = ring.product(prod, objs[seq[pos + j]])
                pos += part
                partial = {w + (u,): c * x for w, c in partial.items() for u, x in prod.items()}
            for w, c in partial.items():
                words[w] = words.get(w, 0) + c
    terms = {}
    for w, c in words.items():
        if not c:
            continue
        for nw, d in normal_word(ring, w).items():
            mono = tuple((m, u) for u in nw)
            terms[mono] = terms.get(mono, 0) + c * d
    total = GElement(ring, terms)
    cache[(m, keys)] = total
    return total


def induced_limit(ring: RingData, lam) -> GElement:
    """Limit of Ind(boxtimes_U (U^{boxtimes} (x) S^{lam(U)}) boxtimes 1) in T-generators."""
    lam = Multipartition(lam)
    cache = ring_cache(ring, "induced")
    hit = cache.get(lam)
    if hit is not None:
        return hit
    items = list(lam)
    total = GElement.zero(ring)
    for types in product(*(partitions_of(sum(p)) for _, p in items)):
        coef = Fraction(1)
        for (_, p), mu in zip(items, types):
            coef *= chi(p, mu)
            for mult in Counter(mu).values():
                coef /= factorial(mult)
        if not coef:
            continue
        levels = sorted({l for mu in types for l in mu})
        elem = GElement.one(ring)
        for l in levels:
            args = []
            for (u, _), mu in zip(items, types):
                args.extend([u] * mu.count(l))
            elem = elem * t_multi(ring, l, args)
        total = total + elem * coef
    cache[lam] = total
    return total


def x_to_t(ring: RingData, lam) -> GElement:
    """X_lam in T-generators: alternating sum over vertical strips removed from the unit component."""
    lam = Multipartition(lam)
    cache = ring_cache(ring, "x2t")
    hit = cache.get(lam)
    if hit is not None:
        return hit
    base = lam.get(ring.unit)
    total = GElement.zero(ring)
    for r in range(len(base) + 1):
        for mu in strips(base, r, "vertical"):
            term = induced_limit(ring, lam.replace(ring.unit, mu))
            total = total + (term if r % 2 == 0 else -term)
    cache[lam] = total
    return total


def graded_image(ring: RingData, terms: dict) -> dict:
    """Image of homogeneous PBW terms in the tensor product of copies of Lambda.

    T_n(U) maps to p_n^{(U)}/n.  Keys are tuples of (label, power-sum partition).
    """
    out = {}
    for m, c in terms.items():
        per = {}
        for n, u in m:
            per.setdefault(u, []).append(n)
            c = c / n
        key = tuple(sorted((u, Partition(sorted(ns, reverse=True))) for u, ns in per.items()))
        out[key] = out.get(key, 0) + c
    return out


def t_to_x(ring: RingData, g: GElement) -> dict:
    """Expand g in the X basis by peeling off the top filtration degree."""
    result = {}
    rest = dict(g.terms)
    while rest:
        d = max(mono_degree(m) for m in rest)
        top = graded_image(ring, {m: c for m, c in rest.items() if mono_degree(m) == d})
        found = {}
        for key, c in top.items():
            choices = [[(u, lam, chi(lam, rho)) for lam in partitions_of(sum(rho))] for u, rho in key]
            for combo in product(*choices):
                val = c
                for _, _, x in combo:
                    val *= x
                if val:
                    mp_key = Multipartition({u: lam for u, lam, _ in combo})
                    found[mp_key] = found.get(mp_key, 0) + val
        found = {k: v for k, v in found.items() if v}
        if not found:
            raise ArithmeticError("top-degree part has no Schur expansion; PBW data inconsistent")
        for k, v in found.items():
            result[k] = result.get(k, 0) + v
            for m, c in x_to_t(ring, k).terms.items():
                left = rest.get(m, 0) - v * c
                if left:
                    rest[m] = left
                else:
                    rest.pop(m, None)
        if rest and max(mono_degree(m) for m in rest) >= d:
            raise ArithmeticError(f"peeling did not lower the degree below {d}")
    return {k: v for k, v in result.items() if v}


def multiply_x_t(ring: RingData, mu, nu) -> dict:
    return t_to_x(ring, x_to_t(ring, mu) * x_to_t(ring, nu))


def divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(n: int) -> int:
    out, k, p = 1, n, 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            out = -out
        p += 1
    if k > 1:
        out = -out
    return out


def phi_p(ring: RingData, obj, n: int) -> GElement:
    """Image of p_n under the map attached to a virtual object: sum_{d|n} d T_d(U^{n/d})."""
    if isinstance(obj, int):
        obj = {obj: Fraction(1)}
    total = GElement.zero(ring)
    for d in divisors(n):
        total = total + t(ring, d, ring.power(obj, n // d)) * d
    return total


def t_from_phi(ring: RingData, obj, r: int) -> GElement:
    """Moebius inversion of phi_p, recovering T_r(U)."""
    if isinstance(obj, int):
        obj = {obj: Fraction(1)}
    total = GElement.zero(ring)
    for d in divisors(r):
        mu = mobius(r // d)
        if mu:
            total = total + phi_p(ring, ring.power(obj, r // d), d) * mu
    return total * Fraction(1, r)


def basic_hook(ring: RingData, u: int, n: int) -> GElement:
    if n == 0:
        return GElement.one(ring)
    return x_to_t(ring, Multipartition({u: (1,) * n}))
