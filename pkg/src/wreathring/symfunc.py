"""Symmetric functions over Q, stored in the power-sum basis.

The s, e and h bases are views: constructors convert into power sums and
`to_basis` converts back.  Coefficients are exact Fractions throughout.
"""

from fractions import Fraction
from functools import cache
import json

from .characters import chi
from .errors import InputError
from .partitions import (
    EMPTY,
    Partition,
    eps_lambda,
    partitions_of,
    partitions_up_to,
    union,
    z_lambda,
)

BASES = ("s", "p", "e", "h")


class SymFunc:
    """Sparse element of Lambda (x) Q: Partition -> Fraction over power sums."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for k, v in (terms or {}).items():
            v = Fraction(v)
            if v:
                k = Partition(k)
                clean[k] = clean.get(k, 0) + v
                if not clean[k]:
                    del clean[k]
        self.terms = clean

    @classmethod
    def one(cls):
        return cls({EMPTY: 1})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymFunc({EMPTY: other})
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*p{lam}" for lam, c in sorted(self.terms.items(), reverse=True))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in _coerce(other).terms.items():
            out[k] = out.get(k, 0) + v
        return SymFunc(out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFunc({k: v * other for k, v in self.terms.items()})
        return multiply(self, other)

    def __rmul__(self, other):
        return self * other

    def degree_part(self, n: int) -> "SymFunc":
        return SymFunc({k: v for k, v in self.terms.items() if sum(k) == n})

    def degrees(self) -> set:
        return {sum(k) for k in self.terms}

    def to_basis(self, basis: str) -> dict:
        """Coefficients in the requested basis, as Partition -> Fraction."""
        if basis == "p":
            return dict(self.terms)
        out = {}
        for n in sorted(self.degrees()):
            inv = _inverse_matrix(basis, n)
            part = self.degree_part(n).terms
            for lam, row in inv.items():
                c = sum((part.get(rho, 0) * a for rho, a in row.items()), Fraction(0))
                if c:
                    out[lam] = c
        return out


def _coerce(x):
    if isinstance(x, SymFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return SymFunc({EMPTY: x})
    raise TypeError(f"cannot use {type(x).__name__} as a symmetric function")


@cache
def schur_to_p(lam) -> SymFunc:
    lam = Partition(lam)
    return SymFunc({mu: Fraction(chi(lam, mu), z_lambda(mu)) for mu in partitions_of(sum(lam))})


@cache
def _h_n(n: int) -> SymFunc:
    return SymFunc({mu: Fraction(1, z_lambda(mu)) for mu in partitions_of(n)})


@cache
def _e_n(n: int) -> SymFunc:
    return SymFunc({mu: Fraction(eps_lambda(mu), z_lambda(mu)) for mu in partitions_of(n)})


def p(lam) -> SymFunc:
    return SymFunc({Partition(lam): 1})


def s(lam) -> SymFunc:
    return schur_to_p(Partition(lam))


@cache
def h(lam) -> SymFunc:
    out = SymFunc.one()
    for part in Partition(lam):
        out = multiply(out, _h_n(part))
    return out


@cache
def e(lam) -> SymFunc:
    out = SymFunc.one()
    for part in Partition(lam):
        out = multiply(out, _e_n(part))
    return out


_BUILDERS = {"s": s, "p": p, "e": e, "h": h}


def from_basis(basis: str, coeffs: dict) -> SymFunc:
    if basis not in _BUILDERS:
        raise InputError(f"unknown basis {basis!r}")
    out = SymFunc()
    for lam, c in coeffs.items():
        out = out + _BUILDERS[basis](Partition(lam)) * Fraction(c)
    return out


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    out = {}
    for a, x in f.terms.items():
        for b, y in g.terms.items():
            k = union((a, b))
            out[k] = out.get(k, 0) + x * y
    return SymFunc(out)


def inner_product(f: SymFunc, g: SymFunc) -> Fraction:
    return sum((c * g.terms[k] * z_lambda(k) for k, c in f.terms.items() if k in g.terms), Fraction(0))


def internal_product(f: SymFunc, g: SymFunc) -> SymFunc:
    return SymFunc({k: c * g.terms[k] * z_lambda(k) for k, c in f.terms.items() if k in g.terms})


def _p_perp(rho, f: SymFunc) -> SymFunc:
    # p_k^perp acts as k * d/dp_k
    terms = dict(f.terms)
    for k in rho:
        new = {}
        for lam, c in terms.items():
            m = lam.count(k)
            if not m:
                continue
            rest = list(lam)
            rest.remove(k)
            key = Partition(rest)
            new[key] = new.get(key, 0) + c * k * m
        terms = new
    return SymFunc(terms)


def perp(f: SymFunc, kind: str, r: int) -> SymFunc:
    """Adjoint of multiplication by h_r (kind 'h') or e_r (kind 'e')."""
    if kind == "h":
        op = _h_n(r)
    elif kind == "e":
        op = _e_n(r)
    else:
        raise InputError(f"perp kind must be 'h' or 'e', got {kind!r}")
    out = SymFunc()
    for rho, c in op.terms.items():
        out = out + _p_perp(rho, f) * c
    return out


def cauchy_kernel(d: int) -> list:
    """Index set of the kernel sum_rho s_rho(x) s_rho(y) truncated at |rho| <= d."""
    return partitions_up_to(d)


def _solve(rows: dict, n: int) -> dict:
    # rows: lam -> p-coefficients of the basis element; returns inverse as
    # lam -> {rho: a} so that coef_lam(f) = sum_rho f_rho * a
    keys = list(partitions_of(n))
    idx = {k: i for i, k in enumerate(keys)}
    size = len(keys)
    # matrix M[lam][rho]; want X with f_p = c M, so c = f_p M^{-1}
    m = [[Fraction(0)] * size + [Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for lam, row in rows.items():
        for rho, a in row.items():
            m[idx[lam]][idx[rho]] = Fraction(a)
    for col in range(size):
        piv = next(r for r in range(col, size) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(size):
            if r != col and m[r][col] != 0:
                fac = m[r][col]
                m[r] = [x - fac * y for x, y in zip(m[r], m[col])]
    inv = [row[size:] for row in m]
    out = {}
    for lam in keys:
        j = idx[lam]
        col = {rho: inv[idx[rho]][j] for rho in keys if inv[idx[rho]][j] != 0}
        out[lam] = col
    return out


@cache
def _inverse_matrix(basis: str, n: int) -> dict:
    if basis == "s":
        # orthonormality: coefficient of s_lam is <f, s_lam> = sum_rho f_rho chi^lam_rho
        return {lam: {rho: Fraction(chi(lam, rho)) for rho in partitions_of(n) if chi(lam, rho)} for lam in partitions_of(n)}
    if basis not in ("e", "h"):
        raise InputError(f"unknown basis {basis!r}")
    build = _BUILDERS[basis]
    return _solve({lam: build(lam).terms for lam in partitions_of(n)}, n)


def to_json(f: SymFunc, basis: str = "s") -> str:
    coeffs = f.to_basis(basis)
    terms = [{"part": list(lam), "coef": str(c)} for lam, c in sorted(coeffs.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))]
    return json.dumps({"basis": basis, "terms": terms})


def from_json(text) -> SymFunc:
    data = json.loads(text) if isinstance(text, str) else text
    try:
        basis = data["basis"]
        coeffs = {}
        for t in data["terms"]:
            lam = Partition(t["part"])
            coeffs[lam] = coeffs.get(lam, 0) + Fraction(t["coef"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed symmetric function JSON: {exc}") from exc
    return from_basis(basis, coeffs)
