"""Exact rational-integer arithmetic.

Factorization, the classical multiplicative functions, Jacobi symbols with
the sign and even-modulus conventions used throughout this package, Hilbert
symbols at infinity, and complete modular square roots.

Everything is deterministic and exact.  Primality testing uses fixed
Miller-Rabin witness sets that are proven complete for all n < 2^64, so no
probabilistic error is possible on the supported domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Factorization",
    "factorize",
    "is_prime",
    "is_prime_vec",
    "primes_up_to",
    "prime_range",
    "divisors",
    "mobius",
    "euler_phi",
    "tau",
    "tau_k",
    "von_mangoldt",
    "jacobi",
    "jacobi_extended",
    "hilbert_infinity",
    "chi4",
    "sqrt_mod",
    "divisor_witness",
]

_TRIAL_BOUND = 100_000

# Witness sets proven complete up to the paired bound (Jaeschke, Sinclair).
_MR_TIERS = (
    (3_215_031_751, (2, 3, 5, 7)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (1 << 64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)

_small_prime_cache: np.ndarray | None = None


def _small_primes() -> np.ndarray:
    global _small_prime_cache
    if _small_prime_cache is None:
        _small_prime_cache = primes_up_to(_TRIAL_BOUND)
    return _small_prime_cache


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n as an int64 array (sieve of Eratosthenes)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def prime_range(lo: int, hi: int) -> np.ndarray:
    """Primes in [lo, hi) by a segmented sieve; memory O(hi - lo + sqrt(hi))."""
    lo = max(lo, 2)
    if hi <= lo:
        return np.empty(0, dtype=np.int64)
    base = primes_up_to(math.isqrt(hi - 1))
    seg = np.ones(hi - lo, dtype=bool)
    if lo <= 1:
        seg[: 2 - lo] = False
    for p in base:
        p = int(p)
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start < hi:
            seg[start - lo :: p] = False
    out = np.nonzero(seg)[0] + lo
    return out[out >= 2].astype(np.int64)


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    # True if n passes the Miller-Rabin test to base a.
    a %= n
    if a == 0:
        return True
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2^64."""
    if n >= 1 << 64:
        raise ValueError("is_prime is deterministic only below 2^64")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for bound, witnesses in _MR_TIERS:
        if n < bound:
            return all(_mr_witness(n, a, d, s) for a in witnesses)
    raise AssertionError("unreachable")


def is_prime_vec(values: np.ndarray) -> np.ndarray:
    """Vectorized deterministic primality for an array of ints < 2^32.

    Uses the witness set {2, 7, 61}, complete below 4_759_123_141; the
    2^32 cap keeps all modular products inside uint64.
    """
    v = np.asarray(values, dtype=np.uint64)
    if v.size == 0:
        return np.zeros(0, dtype=bool)
    if int(v.max()) >= 1 << 32:
        raise ValueError("is_prime_vec requires values < 2^32")
    out = np.zeros(v.shape, dtype=bool)
    for p in (2, 3, 5, 7, 11, 13):
        out |= v == p
    cand = np.nonzero((v % 2 != 0) & (v % 3 != 0) & (v % 5 != 0)
                      & (v % 7 != 0) & (v % 11 != 0) & (v % 13 != 0) & (v > 1))[0]
    if cand.size == 0:
        return out
    n = v[cand]
    d = n - 1
    s = np.zeros(n.shape, dtype=np.uint64)
    while True:
        even = d % 2 == 0
        if not even.any():
            break
        d[even] //= 2
        s[even] += 1
    maxbits = int(d.max()).bit_length()
    passed = np.ones(n.shape, dtype=bool)
    for a in (2, 7, 61):
        base = np.full(n.shape, a, dtype=np.uint64) % n
        x = np.ones(n.shape, dtype=np.uint64)
        bit = d.copy()
        sq = base.copy()
        for _ in range(maxbits):
            odd = (bit & 1).astype(bool)
            x[odd] = x[odd] * sq[odd] % n[odd]
            sq = sq * sq % n
            bit >>= 1
        ok = (x == 1) | (x == n - 1) | (base == 0)
        r = np.zeros(n.shape, dtype=np.uint64)  # squarings performed
        live = ~ok & (s > 1)
        while live.any():
            x[live] = x[live] * x[live] % n[live]
            r[live] += 1
            ok |= live & (x == n - 1)
            live &= ~ok & (r < s - 1)
        passed &= ok
    out[cand] = passed
    return out


@dataclass(frozen=True)
class Factorization:
    """Exact prime factorization n = prod p^e with primes strictly ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 0
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError("factors must be ascending with e >= 1")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError("factor product does not reconstruct n")

    def divisor_count(self) -> int:
        t = 1
        for _, e in self.factors:
            t *= e + 1
        return t


def _rho_brent(n: int) -> int:
    # Brent-cycle Pollard rho; n odd composite, not a small prime power.
    # The (x0, c) schedule is fixed so factorizations are reproducible.
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


def factorize(n: int) -> Factorization:
    """Factor 1 <= n < 2^64 by trial division then Pollard rho (Brent)."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    if n >= 1 << 64:
        raise ValueError("factorize supports n < 2^64")
    m = n
    fac: dict[int, int] = {}
    for p in _small_primes():
        p = int(p)
        if p * p > m:
            break
        while m % p == 0:
            fac[p] = fac.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            fac[m] = fac.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _rho_brent(m)
        stack += [d, m // d]
    return Factorization(n, tuple(sorted(fac.items())))


def divisors(n: int | Factorization) -> list[int]:
    """Sorted list of positive divisors."""
    f = n if isinstance(n, Factorization) else factorize(n)
    out = [1]
    for p, e in f.factors:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def mobius(n: int) -> int:
    """Moebius function: (-1)^k on squarefree n with k prime factors, else 0."""
    f = factorize(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).factors:
        phi *= (p - 1) * p ** (e - 1)
    return phi


def tau(n: int | Factorization) -> int:
    """Number of divisors."""
    f = n if isinstance(n, Factorization) else factorize(n)
    return f.divisor_count()


def tau_k(n: int, k: int) -> int:
    """Number of ordered k-tuples of positive integers with product n."""
    if k < 2:
        raise ValueError("tau_k requires k >= 2")
    t = 1
    for _, e in factorize(n).factors:
        t *= math.comb(e + k - 1, k - 1)
    return t


def von_mangoldt(n: int) -> float:
    """log p if n = p^e is a prime power, else 0."""
    if n < 1:
        raise ValueError("von_mangoldt requires n >= 1")
    if n == 1:
        return 0.0
    f = factorize(n)
    if len(f.factors) == 1:
        return math.log(f.factors[0][0])
    return 0.0


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a/m) for odd m >= 1; (a/1) = 1, 0 iff gcd(a, m) > 1."""
    if m <= 0 or m % 2 == 0:
        raise ValueError("invalid modulus")
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def jacobi_extended(a: int, d: int) -> int:
    """Jacobi symbol extended to even lower entries via the odd part of |d|.

    Defined for odd a only; (a/d) = (a/d') where d' is the odd part of |d|,
    so in particular the symbol is +1 when |d| is a power of two.
    """
    if a % 2 == 0:
        raise ValueError("upper entry must be odd")
    if d == 0:
        raise ValueError("lower entry must be nonzero")
    d = abs(d)
    while d % 2 == 0:
        d //= 2
    return jacobi(a, d)


def hilbert_infinity(a: int, b: int) -> int:
    """Hilbert symbol at the infinite place: -1 iff both arguments negative."""
    if a == 0 or b == 0:
        raise ValueError("hilbert_infinity requires nonzero arguments")
    return -1 if (a < 0 and b < 0) else 1


def chi4(n: int) -> int:
    """The nontrivial character of conductor four."""
    r = n % 4
    if r == 1:
        return 1
    if r == 3:
        return -1
    return 0


def _prime_power_split(pk: int) -> tuple[int, int]:
    if pk < 2:
        raise ValueError("not a prime power")
    if is_prime(pk):
        return pk, 1
    for e in range(2, pk.bit_length() + 1):
        p = round(pk ** (1.0 / e))
        for q in (p - 1, p, p + 1):
            if q >= 2 and q**e == pk and is_prime(q):
                return q, e
    raise ValueError("not a prime power")


def _tonelli_shanks(a: int, p: int) -> int | None:
    # One square root of a mod odd prime p, or None; a coprime to p.
    if jacobi(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


def _sqrt_mod_coprime(a: int, p: int, e: int) -> list[int]:
    # Roots of x^2 = a mod p^e with p not dividing a.
    pk = p**e
    if p != 2:
        r = _tonelli_shanks(a % p, p)
        if r is None:
            return []
        pj = p
        while pj < pk:
            # Hensel step doubles the precision: r -> r - (r^2 - a)/(2r).
            pj = min(pj * pj, pk)
            r = (r - (r * r - a) * pow(2 * r, -1, pj)) % pj
        return sorted({r, pk - r})
    # p = 2
    if e == 1:
        return [a % 2]
    if e == 2:
        return [1, 3] if a % 4 == 1 else []
    if a % 8 != 1:
        return []
    r = 1
    for j in range(3, e):  # lift odd root mod 2^j -> mod 2^(j+1)
        if (r * r - a) % (1 << (j + 1)):
            r += 1 << (j - 1)
    return sorted({r % pk, (-r) % pk, (r + (pk >> 1)) % pk, (-r + (pk >> 1)) % pk})


def sqrt_mod(a: int, pk: int) -> list[int]:
    """All x mod pk with x^2 = a (mod pk), for pk = p^e a prime power.

    Complete and sorted; empty when there is no solution.  Non-coprime a is
    handled by peeling the p-adic valuation of a.
    """
    p, e = _prime_power_split(pk)
    a %= pk
    if a == 0:
        step = p ** ((e + 1) // 2)
        return list(range(0, pk, step))
    t = 0
    aa = a
    while aa % p == 0:
        aa //= p
        t += 1
    if t % 2 == 1:
        return []
    half = t // 2
    base = _sqrt_mod_coprime(aa, p, e - t)
    if not base:
        return []
    mod_y = p ** (e - t + half)  # roots live mod p^(e - t/2), scaled by p^(t/2)
    step = p ** (e - t)
    out = set()
    for y0 in base:
        for j in range(p**half):
            out.add(p**half * ((y0 + j * step) % mod_y) % pk)
    return sorted(out)


def divisor_witness(n: int, k: int) -> int:
    """A divisor d <= n^(1/k) with tau(n) <= (2 tau(d))^(k log k / log 2).

    For squarefree n the witness additionally satisfies the stronger bound
    tau(n) <= (2 tau(d))^k.  Candidates are scanned by decreasing tau(d),
    ties broken by smallest d; d = 1 is always an admissible starting point
    of the search.
    """
    if k < 2:
        raise ValueError("divisor_witness requires k >= 2")
    if n < 1:
        raise ValueError("divisor_witness requires n >= 1")
    f = factorize(n)
    tn = f.divisor_count()
    squarefree = all(e == 1 for _, e in f.factors)
    # d <= n^(1/k) means d^k <= n, tested exactly in integers.
    small = [d for d in divisors(f) if d**k <= n]
    small.sort(key=lambda d: (-tau(d), d))
    exponent = k * math.log(k) / math.log(2)
    for d in small:
        if tn > (2 * tau(d)) ** exponent:
            continue
        if squarefree and tn > (2 * tau(d)) ** k:
            continue
        return d
    raise AssertionError(f"no divisor witness for n={n}, k={k}")
