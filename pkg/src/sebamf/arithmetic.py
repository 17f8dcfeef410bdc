"""Exact integer arithmetic for sums of two squares.

The representation count r2(n) = #{(x, y) in Z^2 : x^2 + y^2 = n} is computed
from the prime factorization of n (4 * sum over divisors of the non-principal
character mod 4), never by lattice enumeration, so single values stay cheap at
n ~ 1e8 and beyond.  Bulk generation of shells uses a counting sieve that
marks every value x^2 + y^2 directly; the two routes are independent, which
the test suite exploits.

All functions are pure; sieve buffers are cached per limit and returned as
read-only arrays, so concurrent callers cannot corrupt shared state.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DomainError, EmptyWindowError, UnfactoredError

# Sieve capacity: a uint16 count array at this size is ~256 MiB.
MAX_SIEVE_LIMIT = 2**27

# Empirical constant for the lattice-count remainder |sum_{n<=x} r2(n) - pi*x|
# <= GAUSS_C * sqrt(x); generous for all x >= 1 (the true remainder exponent
# is well below 1/2).  Zeta tail certificates rely on it.
GAUSS_C = 10.0

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_POLLARD_BUDGET = 2_000_000


@functools.lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    limit = 1000
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
    return tuple(i for i, v in enumerate(sieve) if v)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # Deterministic for n < 3.3e24 with this witness set.
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Brent-cycle Pollard rho; returns a nontrivial factor of composite n."""
    if n % 2 == 0:
        return 2
    budget = _POLLARD_BUDGET
    for c in range(1, 50):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            budget -= r
            if budget <= 0:
                raise UnfactoredError(n)
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise UnfactoredError(n)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}.

    Trial division by primes below 1000, then Miller-Rabin plus Pollard rho
    for what remains.  Raises UnfactoredError instead of ever returning a
    wrong factorization.
    """
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    factors: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n == 1:
        return factors
    stack = [n]
    while stack:
        m = stack.pop()
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return factors


def r2(n: int) -> int:
    """Number of lattice points on the circle x^2 + y^2 = n.

    r2(n) = 4 * (d_1(n) - d_3(n)) for n >= 1, where d_k counts divisors
    congruent to k mod 4; equivalently 4 * prod(e_p + 1) over primes
    p = 1 mod 4, and 0 whenever some p = 3 mod 4 divides n to an odd power.
    """
    if n < 0:
        raise DomainError(f"r2 requires n >= 0, got {n}")
    if n == 0:
        return 1
    out = 4
    for p, e in factorize(int(n)).items():
        m = p % 4
        if m == 1:
            out *= e + 1
        elif m == 3 and e % 2 == 1:
            return 0
    return out


@dataclass(frozen=True)
class LatticeShell:
    """A squared radius n together with its lattice-point count."""

    n: int
    r2: int


@dataclass(frozen=True)
class AnnulusCount:
    """Total lattice-point count over shells with |n - lambda| <= width."""

    lam: float
    width: float
    count: int


def _check_limit(limit: int) -> int:
    limit = int(limit)
    if limit > MAX_SIEVE_LIMIT:
        raise CapacityError(
            f"sieve limit {limit} exceeds capacity {MAX_SIEVE_LIMIT}"
        )
    return max(limit, 0)


@functools.lru_cache(maxsize=6)
def r2_count_array(limit: int) -> np.ndarray:
    """Read-only uint16 array c with c[n] = r2(n) for 0 <= n <= limit.

    Built by enumerating 0 <= x <= y with x^2 + y^2 <= limit and scattering
    the sign/order symmetry weight of each pair, i.e. by counting lattice
    points, independently of the factorization route.
    """
    limit = _check_limit(limit)
    counts = np.zeros(limit + 1, dtype=np.uint16)
    xmax = math.isqrt(limit)
    for x in range(xmax + 1):
        x2 = x * x
        ymax = math.isqrt(limit - x2)
        if ymax < x:
            break
        y = np.arange(x, ymax + 1, dtype=np.int64)
        vals = x2 + y * y
        w = np.full(y.shape, 8, dtype=np.uint16)
        if x == 0:
            w[:] = 4
            w[0] = 1  # the origin
        else:
            w[0] = 4  # diagonal pair x == y
        np.add.at(counts, vals, w)
    counts.setflags(write=False)
    return counts


@functools.lru_cache(maxsize=6)
def shell_arrays(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """(ns, r2s) for all shells with r2 > 0 and n <= limit, ascending."""
    counts = r2_count_array(limit)
    ns = np.nonzero(counts)[0].astype(np.int64)
    r2s = counts[ns].astype(np.int64)
    ns.setflags(write=False)
    r2s.setflags(write=False)
    return ns, r2s


@functools.lru_cache(maxsize=6)
def cumulative_r2(limit: int) -> np.ndarray:
    """Read-only int64 array R with R[n] = sum_{m<=n} r2(m)."""
    out = np.cumsum(r2_count_array(limit), dtype=np.int64)
    out.setflags(write=False)
    return out


def shells_up_to(x: float) -> list[LatticeShell]:
    """All shells (n, r2(n)) with 0 <= n <= x and r2(n) > 0, ascending in n."""
    if x < 0:
        raise DomainError(f"shells_up_to requires x >= 0, got {x}")
    ns, r2s = shell_arrays(int(math.floor(x)))
    return [LatticeShell(int(n), int(c)) for n, c in zip(ns, r2s)]


def annulus_count(lam: float, width: float) -> AnnulusCount:
    """Exact sum of r2(n) over integers n with |n - lam| <= width.

    The lower edge clamps at 0.  Small windows go through per-integer
    factorization; wide ones through the counting sieve.
    """
    if width <= 0:
        raise DomainError(f"annulus width must be positive, got {width}")
    lo = max(0, math.ceil(lam - width))
    hi = math.floor(lam + width)
    if hi < lo:
        return AnnulusCount(float(lam), float(width), 0)
    if hi - lo > 4096:
        counts = r2_count_array(hi)
        total = int(counts[lo : hi + 1].sum(dtype=np.int64))
    else:
        total = sum(r2(n) for n in range(lo, hi + 1))
    return AnnulusCount(float(lam), float(width), total)


def representable_count(x: float) -> int:
    """B(x) = #{1 <= n <= x : r2(n) > 0}."""
    if x < 1:
        return 0
    counts = r2_count_array(int(math.floor(x)))
    return int(np.count_nonzero(counts[1:]))


def landau_ratio(x: float) -> float:
    """B(x) * sqrt(log x) / x, the normalized density of representable n.

    Tends (from above, slowly) to the Landau constant; only the trend is
    asserted anywhere in this package.
    """
    if x < 10:
        raise DomainError(f"landau_ratio requires x >= 10, got {x}")
    return representable_count(x) * math.sqrt(math.log(x)) / x


@dataclass(frozen=True)
class NormalOrderStats:
    """Quartile summary of log r2(n) / log log n over a window."""

    count: int
    median: float
    q1: float
    q3: float


def normal_order_exponent(n_low: int, n_high: int) -> NormalOrderStats:
    """Empirical distribution of log r2(n) / log log n on [n_low, n_high].

    Only representable n enter.  The window should contain at least ~100
    shells for the quartiles to mean anything; a window with no shells at
    all raises EmptyWindowError.  n_low >= 3 keeps log log n positive.
    """
    n_low, n_high = int(n_low), int(n_high)
    if n_low < 3 or n_low >= n_high:
        raise DomainError(
            f"need 3 <= n_low < n_high, got ({n_low}, {n_high})"
        )
    counts = r2_count_array(n_high)
    ns = np.nonzero(counts[n_low : n_high + 1])[0].astype(np.float64) + n_low
    if ns.size == 0:
        raise EmptyWindowError(f"no representable integers in [{n_low}, {n_high}]")
    r2s = counts[ns.astype(np.int64)].astype(np.float64)
    vals = np.log(r2s) / np.log(np.log(ns))
    q1, med, q3 = np.percentile(vals, [25.0, 50.0, 75.0])
    return NormalOrderStats(int(ns.size), float(med), float(q1), float(q3))
