"""Multipartitions: a partition attached to each label of a ring."""

from itertools import product
import json

from ..errors import InputError, UndefinedPad
from ..partitions import EMPTY, Partition, pad_defined, partitions_of


class Multipartition(tuple):
    """Sorted tuple of (label index, nonempty Partition) pairs."""

    __slots__ = ()

    def __new__(cls, items=()):
        if isinstance(items, Multipartition):
            return items
        if isinstance(items, dict):
            items = items.items()
        merged = {}
        for u, lam in items:
            lam = Partition(lam)
            if u in merged:
                raise InputError(f"label {u} given twice")
            if lam:
                merged[int(u)] = lam
        return super().__new__(cls, tuple(sorted(merged.items())))

    def size(self) -> int:
        return sum(sum(lam) for _, lam in self)

    def get(self, u: int) -> Partition:
        for v, lam in self:
            if v == u:
                return lam
        return EMPTY

    def replace(self, u: int, lam) -> "Multipartition":
        d = dict(self)
        d[u] = Partition(lam)
        return Multipartition(d)

    def sizes(self) -> dict:
        return {u: sum(lam) for u, lam in self}

    def pad(self, unit: int, n: int) -> "Multipartition":
        """lambda[n]: add a first part to the unit component."""
        lam = self.get(unit)
        rest = n - self.size()
        if not pad_defined(lam, sum(lam) + rest):
            raise UndefinedPad(f"{self}[{n}] is undefined")
        return self.replace(unit, (rest,) + tuple(lam))

    def unpad(self, unit: int) -> "Multipartition":
        lam = self.get(unit)
        return self.replace(unit, tuple(lam)[1:])

    def pad_defined(self, unit: int, n: int) -> bool:
        lam = self.get(unit)
        return pad_defined(lam, sum(lam) + n - self.size())

    def names(self, ring) -> dict:
        return {ring.labels[u]: list(lam) for u, lam in self}

    def show(self, ring) -> str:
        if not self:
            return "{}"
        return "{" + ", ".join(f"{ring.labels[u]}:{lam}" for u, lam in self) + "}"


EMPTY_MP = Multipartition()


def mp(ring, data) -> Multipartition:
    """Build from a label-name map, e.g. {'1': [2, 1], 's': [1]}."""
    if isinstance(data, Multipartition):
        return data
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise InputError(f"cannot parse multipartition {data!r}") from exc
    if not isinstance(data, dict):
        raise InputError("multipartition must be a JSON object keyed by label names")
    return Multipartition({ring.index(k): Partition(v) for k, v in data.items()})


def multipartitions_of(k: int, n: int) -> list:
    """All multipartitions of total size n over labels 0..k-1."""
    out = []

    def comps(total, slots):
        if slots == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in comps(total - first, slots - 1):
                yield (first,) + rest

    if k == 0:
        return [EMPTY_MP] if n == 0 else []
    for sizes in comps(n, k):
        for parts in product(*(partitions_of(s) for s in sizes)):
            out.append(Multipartition(dict(enumerate(parts))))
    return out


def multipartitions_up_to(k: int, d: int) -> list:
    out = []
    for n in range(d + 1):
        out.extend(multipartitions_of(k, n))
    return out
