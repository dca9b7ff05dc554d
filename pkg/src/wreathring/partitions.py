"""Integer partitions and the operators used throughout the package.

A partition is stored as a plain tuple subclass so it hashes, sorts and
slices like a tuple.  Trailing zeros are dropped on construction.
"""

from collections import Counter
from functools import cache
from math import factorial
import json

from .errors import EmptyStar, InputError, UndefinedPad


class Partition(tuple):
    __slots__ = ()

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise InputError(f"partition parts must be integers, got {p!r}")
        if any(p <= 0 for p in parts):
            raise InputError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InputError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return "[" + ",".join(map(str, self)) + "]"

    __str__ = __repr__


EMPTY = Partition()


def size(lam) -> int:
    return sum(lam)


def length(lam) -> int:
    return len(lam)


def multiplicities(lam) -> Counter:
    return Counter(lam)


def z_lambda(lam) -> int:
    out = 1
    for i, m in Counter(lam).items():
        out *= factorial(m) * i**m
    return out


def eps_lambda(lam) -> int:
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def pad(lam, n: int) -> Partition:
    """lam[n]: prepend the part n - |lam|, which must be at least lam_1."""
    lam = Partition(lam)
    first = n - size(lam)
    if first < (lam[0] if lam else 0) or first < 0:
        raise UndefinedPad(f"{lam}[{n}] is undefined")
    return Partition((first,) + tuple(lam))


def pad_defined(lam, n: int) -> bool:
    first = n - sum(lam)
    return first >= 0 and first >= (lam[0] if lam else 0)


def unpad(lam) -> Partition:
    return Partition(tuple(lam)[1:])


def star(lam, m: int) -> Partition:
    lam = Partition(lam)
    if m < 0:
        raise InputError("star needs m >= 0")
    if m == 0:
        return lam
    if not lam:
        raise EmptyStar("cannot add to the first part of the empty partition")
    return Partition((lam[0] + m,) + tuple(lam[1:]))


def union(lams) -> Partition:
    parts = []
    for lam in lams:
        parts.extend(lam)
    return Partition(sorted(parts, reverse=True))


def conjugate(lam) -> Partition:
    if not lam:
        return EMPTY
    return Partition(tuple(sum(1 for p in lam if p > i) for i in range(lam[0])))


def contains(lam, mu) -> bool:
    """True when the diagram of mu sits inside the diagram of lam."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


@cache
def partitions_of(n: int, max_part=None) -> tuple:
    """All partitions of n, descending-lex."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_up_to(d: int) -> list:
    out = []
    for n in range(d + 1):
        out.extend(partitions_of(n))
    return out


def _horizontal(lam, r):
    # mu interlaces lam: lam[i+1] <= mu[i] <= lam[i]
    lam = tuple(lam)
    out = []

    def rec(i, left, acc):
        if i == len(lam):
            if left == 0:
                out.append(Partition(acc))
            return
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        for mu_i in range(lam[i], lo - 1, -1):
            take = lam[i] - mu_i
            if take > left:
                break
            rec(i + 1, left - take, acc + [mu_i])

    rec(0, r, [])
    return out


def _vertical(lam, r):
    lam = tuple(lam)
    out = []

    def rec(i, left, acc):
        if i == len(lam):
            if left == 0:
                mu = acc
                if all(a >= b for a, b in zip(mu, mu[1:])):
                    out.append(Partition(mu))
            return
        rec(i + 1, left, acc + [lam[i]])
        if left:
            rec(i + 1, left - 1, acc + [lam[i] - 1])

    rec(0, r, [])
    return out


def strips(lam, r: int, direction: str = "horizontal") -> list:
    """Partitions mu inside lam with lam/mu a strip of r boxes."""
    lam = Partition(lam)
    if direction == "horizontal":
        found = _horizontal(lam, r)
    elif direction == "vertical":
        found = _vertical(lam, r)
    else:
        raise InputError(f"unknown strip direction {direction!r}")
    return sorted(set(found), reverse=True)


def parse_partition(text: str) -> Partition:
    """Parse the bracket syntax, e.g. '[3,2,1]' or '[]'."""
    try:
        val = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"cannot parse partition {text!r}") from exc
    if not isinstance(val, list):
        raise InputError(f"partition must be a bracketed list, got {text!r}")
    return Partition(val)
