"""Double cosets S_mu \\ S_n / S_nu of Young subgroups.

Permutations are tuples of images on {1..n}: sigma[i-1] = sigma(i).

Block convention: the Young subgroup of mu is a product of symmetric groups
on consecutive blocks, with factors in increasing order of size from left to
right.  So the block of the last (smallest) part starts at 1 and the block of
mu_1 ends at n.  Matrices are indexed by part index, not block position:
C[i][j] counts x in the block of nu_i with sigma(x) in the block of mu_j.
"""

from .errors import InconsistentMatrix, SizeMismatch
from .partitions import Partition, star


def blocks(lam) -> list:
    """blocks(lam)[j] is the range of positions (1-based) for part j."""
    lam = Partition(lam)
    out = [None] * len(lam)
    pos = 1
    for j in range(len(lam) - 1, -1, -1):
        out[j] = range(pos, pos + lam[j])
        pos += lam[j]
    return out


def _block_of(lam) -> list:
    # position -> part index, padded at index 0
    owner = [None] * (sum(lam) + 1)
    for j, blk in enumerate(blocks(lam)):
        for x in blk:
            owner[x] = j
    return owner


def enumerate_cosets(mu, nu) -> list:
    """Matrices with row sums nu and column sums mu, rows filled lexicographically."""
    mu, nu = Partition(mu), Partition(nu)
    if sum(mu) != sum(nu):
        raise SizeMismatch(f"|{mu}| != |{nu}|")
    out = []
    cols = len(mu)

    def fill_row(target, left, j, row):
        if j == cols - 1:
            if target <= left[j]:
                yield row + [target]
            return
        for x in range(min(target, left[j]), -1, -1):
            yield from fill_row(target - x, left, j + 1, row + [x])

    def rec(i, left, acc):
        if i == len(nu):
            if not any(left):
                out.append(tuple(acc))
            return
        for row in fill_row(nu[i], left, 0, []):
            rec(i + 1, [l - x for l, x in zip(left, row)], acc + [tuple(row)])

    if not mu:
        return [()]
    rec(0, list(mu), [])
    return out


def _check_matrix(c, mu, nu):
    if len(c) != len(nu) or any(len(row) != len(mu) for row in c):
        raise InconsistentMatrix("matrix shape does not match the partitions")
    if any(x < 0 for row in c for x in row):
        raise InconsistentMatrix("matrix entries must be nonnegative")
    if [sum(row) for row in c] != list(nu):
        raise InconsistentMatrix("row sums must equal the parts of nu")
    if [sum(c[i][j] for i in range(len(nu))) for j in range(len(mu))] != list(mu):
        raise InconsistentMatrix("column sums must equal the parts of mu")


def fully_ordered_rep(c, mu, nu) -> tuple:
    """The unique permutation increasing on every nu-block whose inverse is increasing on every mu-block."""
    mu, nu = Partition(mu), Partition(nu)
    _check_matrix(c, mu, nu)
    n = sum(mu)
    a_blocks = blocks(mu)
    b_blocks = blocks(nu)
    next_free = {j: a_blocks[j].start for j in range(len(mu))}
    sigma = [0] * n
    # walk source blocks left to right, and inside each the targets left to right
    for i in range(len(nu) - 1, -1, -1):
        src = iter(b_blocks[i])
        for j in range(len(mu) - 1, -1, -1):
            for _ in range(c[i][j]):
                sigma[next(src) - 1] = next_free[j]
                next_free[j] += 1
    return tuple(sigma)


def coset_matrix(sigma, mu, nu) -> tuple:
    mu, nu = Partition(mu), Partition(nu)
    if len(sigma) != sum(mu) or sum(mu) != sum(nu):
        raise SizeMismatch("permutation size does not match the partitions")
    a_owner = _block_of(mu)
    c = [[0] * len(mu) for _ in nu]
    for i, blk in enumerate(blocks(nu)):
        for x in blk:
            c[i][a_owner[sigma[x - 1]]] += 1
    return tuple(tuple(row) for row in c)


def is_fully_ordered(sigma, mu, nu) -> bool:
    n = len(sigma)
    inv = [0] * (n + 1)
    for x, y in enumerate(sigma, 1):
        inv[y] = x
    for blk in blocks(nu):
        vals = [sigma[x - 1] for x in blk]
        if any(a > b for a, b in zip(vals, vals[1:])):
            return False
    for blk in blocks(mu):
        vals = [inv[y] for y in blk]
        if any(a > b for a, b in zip(vals, vals[1:])):
            return False
    return True


def inversions(sigma) -> int:
    n = len(sigma)
    return sum(1 for a in range(n) for b in range(a + 1, n) if sigma[a] > sigma[b])


def length_bound(c) -> int:
    rows = len(c)
    cols = len(c[0]) if rows else 0
    total = 0
    for i1 in range(rows):
        for i2 in range(i1 + 1, rows):
            for j1 in range(cols):
                for j2 in range(j1 + 1, cols):
                    total += c[i1][j2] * c[i2][j1]
    return total


def min_length_check(sigma, c) -> bool:
    return inversions(sigma) == length_bound(c)


class CosetStabilityError(AssertionError):
    pass


def stabilization_scan(mu, nu, steps: int) -> list:
    """Coset counts for (mu*k, nu*k), k = 0..steps.

    Whenever mu*_1 + nu*_1 exceeds the rank N, every representative must fix
    N and restrict to the representatives one step earlier; a failure raises
    CosetStabilityError.
    """
    mu, nu = Partition(mu), Partition(nu)
    star(mu, 1), star(nu, 1)  # EmptyStar for empty input
    counts = []
    prev = None
    for k in range(steps + 1):
        m, v = star(mu, k), star(nu, k)
        n = sum(m)
        reps = {fully_ordered_rep(c, m, v) for c in enumerate_cosets(m, v)}
        counts.append(len(reps))
        if prev is not None and m[0] + v[0] > n:
            if any(r[-1] != n for r in reps):
                raise CosetStabilityError(f"a representative for {m},{v} moves {n}")
            if {r[:-1] for r in reps} != prev:
                raise CosetStabilityError(f"representatives for {m},{v} do not extend the previous step")
        prev = reps
    return counts


def orbit_count(mu, nu) -> int:
    """Brute-force |S_mu \\ S_n / S_nu| by flood fill over all of S_n."""
    from itertools import permutations

    mu, nu = Partition(mu), Partition(nu)
    n = sum(mu)
    left = [(b[k], b[k + 1]) for b in blocks(mu) for k in range(len(b) - 1)]
    right = [(b[k], b[k + 1]) for b in blocks(nu) for k in range(len(b) - 1)]
    seen = set()
    count = 0
    for start in permutations(range(1, n + 1)):
        if start in seen:
            continue
        count += 1
        seen.add(start)
        stack = [start]
        while stack:
            s = stack.pop()
            nbrs = []
            for a, b in left:
                nbrs.append(tuple(b if y == a else a if y == b else y for y in s))
            for a, b in right:
                t = list(s)
                t[a - 1], t[b - 1] = t[b - 1], t[a - 1]
                nbrs.append(tuple(t))
            for t in nbrs:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
    return count


def double_coset_of(sigma, mu, nu) -> frozenset:
    """All elements of S_mu sigma S_nu, by flood fill from sigma."""
    left = [(b[k], b[k + 1]) for b in blocks(mu) for k in range(len(b) - 1)]
    right = [(b[k], b[k + 1]) for b in blocks(nu) for k in range(len(b) - 1)]
    seen = {tuple(sigma)}
    stack = [tuple(sigma)]
    while stack:
        s = stack.pop()
        for a, b in left:
            t = tuple(b if y == a else a if y == b else y for y in s)
            if t not in seen:
                seen.add(t)
                stack.append(t)
        for a, b in right:
            t = list(s)
            t[a - 1], t[b - 1] = t[b - 1], t[a - 1]
            t = tuple(t)
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)
