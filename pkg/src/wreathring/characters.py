"""Symmetric group characters and the coefficient families built from them."""

from fractions import Fraction
from functools import cache

from .errors import NonStabilized, SizeMismatch
from .partitions import (
    Partition,
    pad,
    pad_defined,
    partitions_of,
    star,
    union,
    z_lambda,
)


@cache
def _mn(lam: tuple, mu: tuple) -> int:
    # Murnaghan-Nakayama on beta-numbers; mu is sorted, largest part removed first.
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    l = len(lam)
    beta = [lam[i] + (l - 1 - i) for i in range(l)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        between = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        new = [newbeta[i] - (l - 1 - i) for i in range(l)]
        while new and new[-1] == 0:
            new.pop()
        val = _mn(tuple(new), rest)
        total += -val if between % 2 else val
    return total


def chi(lam, mu) -> int:
    """Value of the irreducible character lam at cycle type mu."""
    lam, mu = Partition(lam), Partition(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(mu))


@cache
def schur_product(mu, nu) -> dict:
    """s_mu * s_nu in the Schur basis, computed through power sums."""
    mu, nu = Partition(mu), Partition(nu)
    pterms = {}
    for rho in partitions_of(sum(mu)):
        a = Fraction(_mn(tuple(mu), tuple(rho)), z_lambda(rho))
        if not a:
            continue
        for tau in partitions_of(sum(nu)):
            b = _mn(tuple(nu), tuple(tau))
            if not b:
                continue
            key = union((rho, tau))
            pterms[key] = pterms.get(key, 0) + a * Fraction(b, z_lambda(tau))
    out = {}
    for lam in partitions_of(sum(mu) + sum(nu)):
        c = sum(coef * _mn(tuple(lam), tuple(key)) for key, coef in pterms.items())
        if c:
            assert c.denominator == 1
            out[lam] = int(c)
    return out


def lr(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu,nu}."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if sum(mu) + sum(nu) != sum(lam):
        return 0
    if not mu:
        return int(lam == nu)
    if not nu:
        return int(lam == mu)
    if mu < nu:
        mu, nu = nu, mu
    return schur_product(mu, nu).get(lam, 0)


@cache
def skew(lam, mu) -> dict:
    """s_{lam/mu} in the Schur basis: delta -> c^lam_{mu,delta}."""
    lam, mu = Partition(lam), Partition(mu)
    k = sum(lam) - sum(mu)
    if k < 0:
        return {}
    out = {}
    for delta in partitions_of(k):
        c = lr(lam, mu, delta)
        if c:
            out[delta] = c
    return out


def lr3(lam, alpha, beta, gamma) -> int:
    """Coefficient of s_lam in s_alpha s_beta s_gamma."""
    if sum(alpha) + sum(beta) + sum(gamma) != sum(lam):
        return 0
    total = 0
    for delta, c in skew(Partition(lam), Partition(gamma)).items():
        total += c * lr(delta, alpha, beta)
    return total


@cache
def _kron(lam, mu, nu) -> int:
    n = sum(lam)
    tot = 0
    for rho in partitions_of(n):
        a = _mn(lam, rho)
        if not a:
            continue
        b = _mn(mu, rho)
        if not b:
            continue
        tot += Fraction(a * b * _mn(nu, rho), z_lambda(rho))
    assert tot.denominator == 1
    return int(tot)


def kron(lam, mu, nu) -> int:
    """Kronecker coefficient; zero unless all three sizes agree."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not (sum(lam) == sum(mu) == sum(nu)):
        return 0
    lam, mu, nu = sorted((lam, mu, nu))
    return _kron(tuple(lam), tuple(mu), tuple(nu))


@cache
def _reduced_kron(lam, mu, nu) -> int:
    a, b, c = sum(lam), sum(mu), sum(nu)
    total = 0
    for s in range(min(a, b, c) + 1):
        # |rho1| + |rho2| + |rho3| sizes forced by the three size equations
        twice_r1 = b + c - a - s
        twice_r2 = a + c - b - s
        twice_r3 = a + b - c - s
        if min(twice_r1, twice_r2, twice_r3) < 0 or twice_r1 % 2:
            continue
        r1, r2, r3 = twice_r1 // 2, twice_r2 // 2, twice_r3 // 2
        for s1 in partitions_of(s):
            for s2 in partitions_of(s):
                for s3 in partitions_of(s):
                    k = kron(s1, s2, s3)
                    if not k:
                        continue
                    for p1 in partitions_of(r1):
                        for p2 in partitions_of(r2):
                            x = k * lr3(nu, p1, p2, s3)
                            if not x:
                                continue
                            for p3 in partitions_of(r3):
                                y = lr3(lam, s1, p2, p3)
                                if not y:
                                    continue
                                total += x * y * lr3(mu, p1, s2, p3)
    return total


def reduced_kron(lam, mu, nu) -> int:
    """Reduced Kronecker coefficient via the Littlewood identity."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    return _reduced_kron(lam, mu, nu)


def kron_sequence(lam, mu, nu, n_range) -> list:
    """k^{lam[n]}_{mu[n],nu[n]} for n in n_range; None where a pad is undefined."""
    out = []
    for n in n_range:
        if all(pad_defined(x, n) for x in (lam, mu, nu)):
            out.append(kron(pad(lam, n), pad(mu, n), pad(nu, n)))
        else:
            out.append(None)
    return out


def kron_start(lam, mu, nu) -> int:
    return max(sum(x) + (x[0] if x else 0) for x in (lam, mu, nu))


def stable_kron(lam, mu, nu, budget=None, run: int = 3) -> int:
    """Stable value of the padded Kronecker sequence, detected by a run of equal values."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    start = kron_start(lam, mu, nu)
    if budget is None:
        budget = sum(lam) + sum(mu) + sum(nu) + 6
    vals = []
    for n in range(start, max(budget, start + run - 1) + 1):
        vals.append(kron(pad(lam, n), pad(mu, n), pad(nu, n)))
        if len(vals) >= run and len(set(vals[-run:])) == 1:
            return vals[-1]
    raise NonStabilized(f"no run of {run} equal values for {lam},{mu},{nu} up to n={budget}")


def lr_star_sequence(lam, mu, nu, m_range) -> list:
    return [lr(star(lam, m), star(mu, m), nu) for m in m_range]


def eventually_constant(seq, run: int = 3):
    """(True, value) when seq ends in a run of at least `run` equal values."""
    if len(seq) < run:
        return False, None
    tail = seq[-run:]
    if len(set(tail)) == 1:
        return True, tail[0]
    return False, None


__all__ = [
    "chi",
    "lr",
    "lr3",
    "kron",
    "reduced_kron",
    "kron_sequence",
    "lr_star_sequence",
    "stable_kron",
    "schur_product",
    "skew",
]
