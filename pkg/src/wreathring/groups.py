"""Small finite groups with Cayley tables and rational character tables."""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import permutations, product
import json

from .characters import chi
from .errors import InputError
from .groth_ring import check_group_table, rep_from_chartable
from .partitions import partitions_of


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    elements: tuple
    table: tuple  # table[a][b] = index of a*b
    classes: tuple  # tuples of element indices, identity class first
    chars: tuple  # rows of Fractions, columns follow classes
    labels: tuple  # irreducible names, aligned with chars

    @cached_property
    def identity(self) -> int:
        return self.classes[0][0]

    @cached_property
    def class_of(self) -> tuple:
        out = [0] * len(self.elements)
        for ci, cls in enumerate(self.classes):
            for x in cls:
                out[x] = ci
        return tuple(out)

    @cached_property
    def inverse(self) -> tuple:
        e = self.identity
        return tuple(next(j for j in range(len(self.elements)) if self.table[i][j] == e) for i in range(len(self.elements)))

    @property
    def order(self) -> int:
        return len(self.elements)

    def ring(self):
        return rep_from_chartable([(len(c), self.elements[c[0]]) for c in self.classes], self.chars, self.labels)

    def char_value(self, label: int, element: int) -> Fraction:
        return self.chars[label][self.class_of[element]]

    def to_json(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "elements": list(self.elements),
                "table": [[self.elements[x] for x in row] for row in self.table],
                "classes": [{"size": len(c), "name": self.elements[c[0]], "elements": [self.elements[x] for x in c]} for c in self.classes],
                "chars": [[str(x) for x in row] for row in self.chars],
                "labels": list(self.labels),
            }
        )


def conjugacy_classes(table, identity) -> list:
    k = len(table)
    inv = [next(j for j in range(k) if table[i][j] == identity) for i in range(k)]
    seen = set()
    out = []
    for x in range(k):
        if x in seen:
            continue
        cls = sorted({table[table[g][x]][inv[g]] for g in range(k)})
        seen.update(cls)
        out.append(tuple(cls))
    out.sort(key=lambda c: (c[0] != identity, c[0]))
    return out


def make_group(elements, table, chars, labels=None, classes=None, name="") -> FiniteGroup:
    """Assemble a group; class order follows `classes` (lists of element names) when given."""
    elements = tuple(str(x) for x in elements)
    e, t = check_group_table(elements, table)
    computed = conjugacy_classes(t, e)
    if classes is not None:
        pos = {x: i for i, x in enumerate(elements)}
        given = [tuple(sorted(pos[str(x)] for x in c)) for c in classes]
        if sorted(given) != sorted(computed):
            raise InputError("listed classes are not the conjugacy classes of the table")
        if e not in given[0]:
            raise InputError("the first class must be the identity class")
        computed = given
    rows = tuple(tuple(Fraction(x) for x in row) for row in chars)
    if labels is None:
        labels = tuple("1" if all(x == 1 for x in r) else f"chi{i}" for i, r in enumerate(rows))
    g = FiniteGroup(name, elements, tuple(tuple(r) for r in t), tuple(computed), rows, tuple(str(x) for x in labels))
    g.ring()  # orthogonality and integrality
    return g


def group_from_json(text) -> FiniteGroup:
    data = json.loads(text) if isinstance(text, str) else text
    try:
        classes = data.get("classes")
        if classes is not None:
            classes = [c["elements"] for c in classes]
        return make_group(data["elements"], data["table"], data["chars"], data.get("labels"), classes, data.get("name", ""))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed group JSON: {exc}") from exc


def trivial_group() -> FiniteGroup:
    return make_group(["e"], [["e"]], [[1]], ["1"], name="trivial")


def cyclic2() -> FiniteGroup:
    return make_group(["e", "a"], [["e", "a"], ["a", "e"]], [[1, 1], [1, -1]], ["1", "s"], name="Z2")


def klein_four() -> FiniteGroup:
    names = ["e", "a", "b", "c"]
    vecs = [(0, 0), (1, 0), (0, 1), (1, 1)]
    table = [[names[vecs.index(((x[0] + y[0]) % 2, (x[1] + y[1]) % 2))] for y in vecs] for x in vecs]
    chars = [[(-1) ** (u[0] * x[0] + u[1] * x[1]) for x in vecs] for u in vecs]
    return make_group(names, table, chars, ["1", "a", "b", "c"], classes=[[n] for n in names], name="V4")


def _perm_name(p) -> str:
    return "".join(str(x + 1) for x in p)


def _cycle_type(p) -> tuple:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen:
            continue
        length = 0
        j = i
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def symmetric_group(k: int) -> FiniteGroup:
    """S_k on one-line notation names; irreducibles labelled by partitions."""
    perms = list(permutations(range(k)))
    names = [_perm_name(p) for p in perms]
    table = [[names[perms.index(tuple(a[b[i]] for i in range(k)))] for b in perms] for a in perms]
    types = list(partitions_of(k))[::-1]  # identity type (1^k) first
    classes = [[names[i] for i, p in enumerate(perms) if _cycle_type(p) == t] for t in types]
    lams = list(partitions_of(k))
    chars = [[chi(lam, t) for t in types] for lam in lams]
    labels = ["1" if lam == (k,) else ("sgn" if k > 1 and lam == (1,) * k else "std" if k == 3 and lam == (2, 1) else str(lam)) for lam in lams]
    return make_group(names, table, chars, labels, classes=classes, name=f"S{k}")


STANDARD = {
    "trivial": trivial_group,
    "Z2": cyclic2,
    "V4": klein_four,
    "S3": lambda: symmetric_group(3),
    "S4": lambda: symmetric_group(4),
}


def cayley_json(g: FiniteGroup) -> str:
    return json.dumps({"elements": list(g.elements), "table": [[g.elements[x] for x in row] for row in g.table]})


def chartable_json(g: FiniteGroup) -> str:
    return json.dumps(
        {
            "classes": [{"size": len(c), "name": g.elements[c[0]]} for c in g.classes],
            "chars": [[str(x) for x in row] for row in g.chars],
            "labels": list(g.labels),
        }
    )


def is_abelian(g: FiniteGroup) -> bool:
    k = g.order
    return all(g.table[a][b] == g.table[b][a] for a, b in product(range(k), repeat=2))
