"""Finite based rings: labels, a unit and nonnegative structure constants N_{U,V}^W."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
import json

from .errors import InputError, NonIntegerMultiplicity, NotAGroup, NotOrthogonal


@dataclass(frozen=True)
class RingData:
    labels: tuple
    unit: int
    entries: tuple  # sorted ((u, v, w), n) with n != 0
    name: str = field(default="", compare=False)

    @classmethod
    def build(cls, labels, unit, tensor: dict, name=""):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise InputError("ring labels must be distinct")
        if not 0 <= unit < len(labels):
            raise InputError("unit index out of range")
        k = len(labels)
        entries = []
        for (u, v, w), n in tensor.items():
            if not all(0 <= x < k for x in (u, v, w)):
                raise InputError(f"tensor index out of range: {(u, v, w)}")
            if n != int(n):
                raise InputError(f"tensor entries must be integers: {n}")
            if n:
                entries.append(((u, v, w), int(n)))
        return cls(labels, unit, tuple(sorted(entries)), name)

    @cached_property
    def tensor(self) -> dict:
        return dict(self.entries)

    @cached_property
    def _rows(self) -> dict:
        out = {}
        for (u, v, w), n in self.entries:
            out.setdefault((u, v), {})[w] = n
        return out

    def __len__(self):
        return len(self.labels)

    def n(self, u, v, w) -> int:
        return self.tensor.get((u, v, w), 0)

    def mult(self, u: int, v: int) -> dict:
        """[U][V] as {w: N}."""
        return self._rows.get((u, v), {})

    def index(self, label) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise InputError(f"unknown label {label!r}; ring has {list(self.labels)}") from None

    @cached_property
    def is_commutative(self) -> bool:
        return all(self.n(v, u, w) == n for (u, v, w), n in self.entries)

    def product(self, a: dict, b: dict) -> dict:
        """Product of virtual objects (label index -> Fraction)."""
        out = {}
        for u, x in a.items():
            for v, y in b.items():
                for w, n in self.mult(u, v).items():
                    out[w] = out.get(w, 0) + x * y * n
        return {w: c for w, c in out.items() if c}

    def power(self, a: dict, k: int) -> dict:
        out = {self.unit: Fraction(1)}
        for _ in range(k):
            out = self.product(out, a)
        return out

    def basis(self, u: int) -> dict:
        return {u: Fraction(1)}

    def to_json(self) -> str:
        return json.dumps(
            {
                "labels": list(self.labels),
                "unit": self.unit,
                "tensor": [{"u": u, "v": v, "w": w, "n": n} for (u, v, w), n in self.entries],
            }
        )

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        try:
            tensor = {}
            for t in data["tensor"]:
                key = (int(t["u"]), int(t["v"]), int(t["w"]))
                tensor[key] = tensor.get(key, 0) + t["n"]
            return cls.build(data["labels"], int(data["unit"]), tensor, data.get("name", ""))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed ring JSON: {exc}") from exc


def virtual(ring: RingData, coeffs: dict) -> dict:
    """Virtual object from a label-name map."""
    return {ring.index(k): Fraction(v) for k, v in coeffs.items() if Fraction(v)}


def validate(r: RingData) -> list:
    """Violations of the unit law, nonnegativity and associativity; empty when valid."""
    bad = []
    k = len(r.labels)
    for (u, v, w), n in r.entries:
        if n < 0:
            bad.append(f"negative entry N[{r.labels[u]},{r.labels[v]}->{r.labels[w]}] = {n}")
    one = r.unit
    for v in range(k):
        for w in range(k):
            want = int(v == w)
            if r.n(one, v, w) != want:
                bad.append(f"unit law fails: N[1,{r.labels[v]}->{r.labels[w]}] = {r.n(one, v, w)}")
            if r.n(v, one, w) != want:
                bad.append(f"unit law fails: N[{r.labels[v]},1->{r.labels[w]}] = {r.n(v, one, w)}")
    for u, v, w in product(range(k), repeat=3):
        lhs = {}
        for x, a in r.mult(u, v).items():
            for y, b in r.mult(x, w).items():
                lhs[y] = lhs.get(y, 0) + a * b
        rhs = {}
        for x, a in r.mult(v, w).items():
            for y, b in r.mult(u, x).items():
                rhs[y] = rhs.get(y, 0) + a * b
        if {y: c for y, c in lhs.items() if c} != {y: c for y, c in rhs.items() if c}:
            bad.append(f"associativity fails at ({r.labels[u]},{r.labels[v]},{r.labels[w]})")
    return bad


def cyclic_group(m: int) -> RingData:
    """Group ring of Z/m.  Label names: '1' for the unit, 's' when m = 2, else 'g', 'g^2', ..."""
    if m < 1:
        raise InputError("cyclic_group needs m >= 1")
    if m == 2:
        names = ["1", "s"]
    else:
        names = ["1"] + ["g" if i == 1 else f"g^{i}" for i in range(1, m)]
    tensor = {(i, j, (i + j) % m): 1 for i in range(m) for j in range(m)}
    return RingData.build(names, 0, tensor, name=f"Z{m}" if m > 1 else "Vect")


def vect() -> RingData:
    return cyclic_group(1)


def check_group_table(elements, table) -> tuple:
    """Validate a Cayley table; return (identity index, integer table)."""
    elements = [str(x) for x in elements]
    k = len(elements)
    if len(set(elements)) != k or k == 0:
        raise NotAGroup("elements must be distinct and nonempty")
    pos = {e: i for i, e in enumerate(elements)}
    if len(table) != k or any(len(row) != k for row in table):
        raise NotAGroup("closure: table must be square of size |elements|")
    try:
        t = [[pos[str(x)] for x in row] for row in table]
    except KeyError as exc:
        raise NotAGroup(f"closure: table entry {exc} is not an element") from None
    ident = [i for i in range(k) if all(t[i][j] == j and t[j][i] == j for j in range(k))]
    if not ident:
        raise NotAGroup("identity: no two-sided identity element")
    e = ident[0]
    for i in range(k):
        if not any(t[i][j] == e and t[j][i] == e for j in range(k)):
            raise NotAGroup(f"inverses: {elements[i]} has no inverse")
    for a, b, c in product(range(k), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise NotAGroup(f"associativity: ({elements[a]}{elements[b]}){elements[c]} != {elements[a]}({elements[b]}{elements[c]})")
    return e, t


def group_grading(elements, table) -> RingData:
    """Vec_G: labels are the group elements and [g][h] = [gh]."""
    e, t = check_group_table(elements, table)
    k = len(elements)
    tensor = {(a, b, t[a][b]): 1 for a in range(k) for b in range(k)}
    return RingData.build(elements, e, tensor, name="VecG")


def rep_from_chartable(classes, chars, labels=None) -> RingData:
    """Representation ring from a rational character table.

    classes: list of (size, name); chars: one row per irreducible, columns
    follow classes, first class is the identity.
    """
    sizes = [int(c[0]) for c in classes]
    k = len(sizes)
    if not k or sizes[0] != 1:
        raise InputError("the first class must be the identity class of size 1")
    rows = [[Fraction(x) for x in row] for row in chars]
    if len(rows) != k or any(len(r) != k for r in rows):
        raise InputError("character table must be square")
    order = sum(sizes)
    for a in range(k):
        for b in range(k):
            ip = sum(s * x * y for s, x, y in zip(sizes, rows[a], rows[b])) / order
            if ip != int(a == b):
                raise NotOrthogonal(f"<chi_{a}, chi_{b}> = {ip}")
    trivial = [i for i, r in enumerate(rows) if all(x == 1 for x in r)]
    if not trivial:
        raise InputError("no trivial character in the table")
    if labels is None:
        labels = ["1" if i == trivial[0] else f"chi{i}" for i in range(k)]
    tensor = {}
    for u, v, w in product(range(k), repeat=3):
        val = sum(s * x * y * z for s, x, y, z in zip(sizes, rows[u], rows[v], rows[w])) / order
        if val.denominator != 1 or val < 0:
            raise NonIntegerMultiplicity(f"multiplicity of {w} in {u}*{v} is {val}")
        if val:
            tensor[(u, v, w)] = int(val)
    return RingData.build(labels, trivial[0], tensor, name="RepG")


def chartable_from_json(text):
    data = json.loads(text) if isinstance(text, str) else text
    try:
        classes = [(c["size"], c.get("name", "")) for c in data["classes"]]
        return rep_from_chartable(classes, data["chars"], data.get("labels"))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed character table JSON: {exc}") from exc


def cayley_from_json(text):
    data = json.loads(text) if isinstance(text, str) else text
    try:
        return group_grading(data["elements"], data["table"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed Cayley table JSON: {exc}") from exc


def load_ring(text) -> RingData:
    """Accept RingData, character-table or Cayley-table JSON."""
    data = json.loads(text) if isinstance(text, str) else text
    if not isinstance(data, dict):
        raise InputError("ring file must hold a JSON object")
    if "tensor" in data:
        return RingData.from_json(data)
    if "chars" in data:
        return chartable_from_json(data)
    if "table" in data:
        return cayley_from_json(data)
    raise InputError("unrecognized ring file: expected tensor, chars or table")


def ring_cache(ring: RingData, name: str) -> dict:
    """Per-ring memo table.  Entries are written once and never mutated."""
    store = ring.__dict__.setdefault("_memo", {})
    return store.setdefault(name, {})
