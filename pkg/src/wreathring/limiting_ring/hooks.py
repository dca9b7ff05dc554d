"""Basic-hook expansions and the irreducible character basis for Vect."""

from fractions import Fraction
from itertools import product

from ..errors import NoncommutativeRing, SizeMismatch
from ..groth_ring import RingData, ring_cache, vect
from ..partitions import Partition
from ..symfunc import p as p_sym
from .multipartition import Multipartition
from .pbw import GElement, mono_degree
from .tgen import basic_hook, graded_image, x_to_t


def _p_to_e(rho) -> dict:
    return p_sym(rho).to_basis("e")


def expand_in_generators(ring: RingData, g: GElement, gen) -> dict:
    """Polynomial in commuting generators gen(n, u), each with top-degree image e_n^{(u)}.

    Returns {key: coefficient} where key is a sorted tuple of (n, u) factors.
    Solved degree by degree, top part first.
    """
    if not ring.is_commutative:
        raise NoncommutativeRing("hook expansions are only canonical for commutative rings")
    poly = {}
    rest = dict(g.terms)
    while rest:
        d = max(mono_degree(m) for m in rest)
        top = graded_image(ring, {m: c for m, c in rest.items() if mono_degree(m) == d})
        found = {}
        for key, c in top.items():
            choices = [[(u, lam, a) for lam, a in _p_to_e(rho).items()] for u, rho in key]
            for combo in product(*choices):
                val = c
                for _, _, a in combo:
                    val *= a
                mono = tuple(sorted((n, u) for u, lam, _ in combo for n in lam))
                found[mono] = found.get(mono, 0) + val
        found = {k: v for k, v in found.items() if v}
        if not found:
            raise ArithmeticError("top-degree part did not expand")
        for mono, v in found.items():
            poly[mono] = poly.get(mono, 0) + v
            elem = GElement.one(ring)
            for n, u in mono:
                elem = elem * gen(n, u)
            for m, c in elem.terms.items():
                left = rest.get(m, 0) - v * c
                if left:
                    rest[m] = left
                else:
                    rest.pop(m, None)
        if rest and max(mono_degree(m) for m in rest) >= d:
            raise ArithmeticError(f"triangular solve stalled at degree {d}")
    return {k: v for k, v in poly.items() if v}


def hooks_expand(ring: RingData, g: GElement) -> dict:
    """g as a polynomial in basic hooks; keys are sorted tuples of (n, label index)."""
    return expand_in_generators(ring, g, lambda n, u: basic_hook(ring, u, n))


def evaluate_hooks(ring: RingData, poly: dict) -> GElement:
    total = GElement.zero(ring)
    for mono, c in poly.items():
        elem = GElement.one(ring)
        for n, u in mono:
            elem = elem * basic_hook(ring, u, n)
        total = total + elem * c
    return total


def _phi_e(ring, n: int) -> GElement:
    cache = ring_cache(ring, "phi_e")
    if n not in cache:
        cache[n] = basic_hook(ring, ring.unit, n) + basic_hook(ring, ring.unit, n - 1)
    return cache[n]


def char_basis(lam) -> dict:
    """X_lam for Vect as a polynomial in e_1, e_2, ...; keys are partitions (e_lam monomials)."""
    lam = Partition(lam)
    ring = vect()
    g = x_to_t(ring, Multipartition({ring.unit: lam}))
    poly = expand_in_generators(ring, g, lambda n, u: _phi_e(ring, n))
    return {Partition(sorted((n for n, _ in mono), reverse=True)): c for mono, c in poly.items()}


def exterior_power_chars(n: int, mu, top: int) -> list:
    """Characters of the exterior powers 0..top of the permutation representation at cycle type mu."""
    mu = Partition(mu)
    if sum(mu) != n:
        raise SizeMismatch(f"{mu} is not a partition of {n}")
    pj = [None] + [sum(part for part in mu if j % part == 0) for j in range(1, top + 1)]
    e = [Fraction(1)]
    for i in range(1, top + 1):
        acc = sum(((-1) ** (j - 1) * e[i - j] * pj[j] for j in range(1, i + 1)), Fraction(0))
        e.append(acc / i)
    return e


def char_basis_eval(poly: dict, n: int, mu) -> Fraction:
    top = max((max(k) for k in poly if k), default=0)
    e = exterior_power_chars(n, mu, top)
    total = Fraction(0)
    for key, c in poly.items():
        val = Fraction(c)
        for i in key:
            val *= e[i]
        total += val
    return total


def show_hooks(ring: RingData, poly: dict) -> str:
    if not poly:
        return "0"
    parts = []
    for mono, c in sorted(poly.items(), key=lambda kv: (-sum(n for n, _ in kv[0]), kv[0])):
        word = "*".join(f"e{n}({ring.labels[u]})" for n, u in mono) or "1"
        parts.append(f"{c}*{word}")
    return " + ".join(parts)


def show_e_poly(poly: dict) -> str:
    if not poly:
        return "0"
    parts = []
    for lam, c in sorted(poly.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0]))):
        word = "*".join(f"e{i}" for i in lam) or "1"
        parts.append(f"{c}*{word}")
    return " + ".join(parts)


__all__ = ["hooks_expand", "evaluate_hooks", "char_basis", "char_basis_eval", "expand_in_generators"]
