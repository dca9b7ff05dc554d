"""Elements of the limiting ring in the PBW basis of T-monomials.

A monomial is a tuple of (level, label index) pairs sorted by level and then
label.  Generators at different levels commute; at one level they satisfy

    T_n(U) T_n(V) = T_n(V) T_n(U) + sum_W (N_{U,V}^W - N_{V,U}^W) T_n(W).
"""

from fractions import Fraction
from itertools import groupby, product

from ..groth_ring import RingData, ring_cache

ONE_MONO = ()


class GElement:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingData, terms=None):
        self.ring = ring
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def one(cls, ring):
        return cls(ring, {ONE_MONO: 1})

    @classmethod
    def zero(cls, ring):
        return cls(ring)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GElement(self.ring, {ONE_MONO: other})
        return isinstance(other, GElement) and self.terms == other.terms

    __hash__ = None

    def _coerce(self, other):
        if isinstance(other, GElement):
            return other
        return GElement(self.ring, {ONE_MONO: Fraction(other)})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return GElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return GElement(self.ring, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GElement):
            c = Fraction(other)
            return GElement(self.ring, {k: v * c for k, v in self.terms.items()})
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                for m, c in mono_product(self.ring, a, b).items():
                    out[m] = out.get(m, 0) + x * y * c
        return GElement(self.ring, out)

    def __rmul__(self, other):
        return self * other

    def degree(self) -> int:
        """Filtration degree; -1 for zero."""
        return max((mono_degree(m) for m in self.terms), default=-1)

    def top(self) -> dict:
        d = self.degree()
        return {m: c for m, c in self.terms.items() if mono_degree(m) == d}

    def show(self) -> str:
        if not self.terms:
            return "0"
        labels = self.ring.labels
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda kv: (-mono_degree(kv[0]), kv[0])):
            word = "".join(f"T{n}({labels[u]})" for n, u in m) or "1"
            parts.append(f"{c}*{word}")
        return " + ".join(parts)

    __repr__ = show


def mono_degree(m) -> int:
    return sum(n for n, _ in m)


def bracket(ring: RingData, a: int, b: int) -> dict:
    """[T(a), T(b)] at a common level, as {w: coefficient}."""
    out = dict(ring.mult(a, b))
    for w, n in ring.mult(b, a).items():
        out[w] = out.get(w, 0) - n
    return {w: c for w, c in out.items() if c}


def normal_word(ring: RingData, word: tuple) -> dict:
    """PBW normal form of a product of same-level generators given by label indices."""
    cache = ring_cache(ring, "word")
    hit = cache.get(word)
    if hit is not None:
        return hit
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            break
    else:
        res = {word: Fraction(1)}
        cache[word] = res
        return res
    a, b = word[i], word[i + 1]
    res = dict(normal_word(ring, word[:i] + (b, a) + word[i + 2 :]))
    for w, c in bracket(ring, a, b).items():
        for k, v in normal_word(ring, word[:i] + (w,) + word[i + 2 :]).items():
            res[k] = res.get(k, 0) + c * v
    res = {k: v for k, v in res.items() if v}
    cache[word] = res
    return res


def _by_level(m) -> dict:
    return {lvl: tuple(u for _, u in grp) for lvl, grp in groupby(m, key=lambda t: t[0])}


def mono_product(ring: RingData, a: tuple, b: tuple) -> dict:
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    cache = ring_cache(ring, "mono")
    key = (a, b)
    hit = cache.get(key)
    if hit is not None:
        return hit
    la, lb = _by_level(a), _by_level(b)
    levels = sorted(set(la) | set(lb))
    per_level = []
    for lvl in levels:
        word = la.get(lvl, ()) + lb.get(lvl, ())
        if lvl in la and lvl in lb:
            nf = normal_word(ring, word)
        else:
            nf = {word: 1}
        per_level.append([(tuple((lvl, u) for u in w), c) for w, c in nf.items()])
    res = {}
    for combo in product(*per_level):
        mono = tuple(x for part, _ in combo for x in part)
        c = Fraction(1)
        for _, x in combo:
            c *= x
        res[mono] = res.get(mono, 0) + c
    res = {k: v for k, v in res.items() if v}
    cache[key] = res
    return res


def t(ring: RingData, level: int, obj) -> GElement:
    """T_level of a virtual object {label index: coefficient}, or of a single label index."""
    if isinstance(obj, int):
        obj = {obj: 1}
    return GElement(ring, {((level, u),): c for u, c in obj.items() if c})


def pbw_normalize(ring: RingData, word) -> GElement:
    """Product of T_level(object) factors, rewritten in the PBW basis."""
    out = GElement.one(ring)
    for level, obj in word:
        out = out * t(ring, level, obj)
    return out
