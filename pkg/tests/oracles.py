"""Slow reference implementations, independent of the package internals."""

from fractions import Fraction
from itertools import permutations, product
from math import factorial


def parts_of(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first,) + rest for rest in parts_of(n - first, first))
    return out


def zee(lam):
    out = 1
    for k in set(lam):
        m = lam.count(k)
        out *= k**m * factorial(m)
    return out


def _pmul(a, b):
    out = {}
    for x, c in a.items():
        for y, d in b.items():
            key = tuple(sorted(x + y, reverse=True))
            out[key] = out.get(key, 0) + c * d
    return out


def _h(n):
    if n < 0:
        return {}
    return {rho: Fraction(1, zee(rho)) for rho in parts_of(n)}


def _sign(perm):
    s = 1
    seen = set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def schur_in_p(lam):
    """Jacobi-Trudi determinant det(h_{lam_i - i + j}) expanded in power sums."""
    lam = tuple(lam)
    k = len(lam)
    if k == 0:
        return {(): Fraction(1)}
    total = {}
    for perm in permutations(range(k)):
        term = {(): Fraction(_sign(perm))}
        for i in range(k):
            term = _pmul(term, _h(lam[i] - i + perm[i]))
            if not term:
                break
        for key, c in term.items():
            total[key] = total.get(key, 0) + c
    return {key: c for key, c in total.items() if c}


def char_value(lam, mu):
    return int(schur_in_p(lam).get(tuple(mu), 0) * zee(tuple(mu)))


def lr_tableaux(lam, mu, nu):
    """Count LR tableaux of shape lam/mu and content nu by brute-force filling."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        return 0
    mu = mu + (0,) * (len(lam) - len(mu))
    cells = [(r, c) for r in range(len(lam)) for c in range(mu[r], lam[r])]
    k = len(nu)
    if not cells:
        return 1
    if k == 0:
        return 0
    count = 0
    for fill in product(range(k), repeat=len(cells)):
        if any(fill.count(i) != nu[i] for i in range(k)):
            continue
        t = dict(zip(cells, fill))
        ok = True
        for (r, c), v in t.items():
            if (r, c + 1) in t and t[(r, c + 1)] < v:
                ok = False
                break
            if (r + 1, c) in t and t[(r + 1, c)] <= v:
                ok = False
                break
        if not ok:
            continue
        # reading word: right to left, top to bottom
        seen = [0] * k
        for r in range(len(lam)):
            for c in range(lam[r] - 1, mu[r] - 1, -1):
                v = t[(r, c)]
                seen[v] += 1
                if v and seen[v] > seen[v - 1]:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


def subdiagrams(lam, r):
    """All partitions mu inside lam with |lam| - |mu| = r."""
    lam = tuple(lam)
    out = []
    for mu in parts_of(sum(lam) - r):
        if len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam)):
            out.append(mu)
    return out


def skew_cells(lam, mu):
    mu = tuple(mu) + (0,) * (len(lam) - len(mu))
    return {(r, c) for r in range(len(lam)) for c in range(mu[r], lam[r])}


def brute_strips(lam, r, direction):
    out = []
    for mu in subdiagrams(lam, r):
        cells = skew_cells(lam, mu)
        axis = 1 if direction == "horizontal" else 0
        coords = [cell[axis] for cell in cells]
        if len(coords) == len(set(coords)):
            out.append(mu)
    return sorted(out)


def inversions(perm):
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
