"""Quadratic-congruence counting kernels.

Roots of nu^2 + 1 = 0 (mod d) and their correspondence with primitive
two-square representations d = r^2 + s^2, the multiplicative root-counting
functions rho, the square-root counts n(a; b), the pair counts
N(a; q) = #{a g1^2 = g2^2 (mod q)} with their closed forms, the
exponential sums G(h1, h2) on the determinant modulus, and the
zero-frequency density G0 with its divisor-sum closed form

    G0(z1, z2) = 2 sum_{4d | Delta} phi(d)/d (z2/z1 / d),

valid when z1, z2 are odd, primitive, mutually coprime and congruent
mod 8.  Every closed form here is paired with a brute-force enumeration;
the brute routes never share code with the formula routes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import (
    Factorization,
    chi4,
    divisors,
    euler_phi,
    factorize,
    jacobi,
    jacobi_extended,
    sqrt_mod,
)
from .gaussian import GaussianInt, delta, ggcd, is_primitive, rational_residue

__all__ = [
    "RootSet",
    "roots_minus_one",
    "root_to_representation",
    "rho",
    "rho_b",
    "rho_exp",
    "rho_exp_reduced",
    "n_sqrt",
    "N_brute",
    "N_formula",
    "N_local",
    "N2_brute",
    "G_sum",
    "G0_brute",
    "G0_formula",
    "SpacingReport",
    "root_spacing_check",
]


@dataclass(frozen=True)
class RootSet:
    """Sorted residues nu mod d with nu^2 + 1 = 0 (mod d)."""

    d: int
    roots: tuple[int, ...]

    def __post_init__(self):
        for nu in self.roots:
            if not 0 <= nu < self.d or (nu * nu + 1) % self.d:
                raise ValueError("not a root set")


def _crt_roots(parts: list[tuple[int, list[int]]]) -> list[int]:
    # parts = [(modulus, residues), ...] with pairwise coprime moduli.
    res = [0]
    mod = 1
    for m, roots in parts:
        inv = pow(mod % m, -1, m) if m > 1 else 0
        res = [x + mod * ((r - x) * inv % m) for x in res for r in roots]
        mod *= m
    return sorted(r % mod for r in res)


def _roots_neg_square(ell: int, d: int) -> list[int]:
    # All nu mod d with nu^2 + ell^2 = 0 (mod d).
    if d == 1:
        return [0]
    parts = []
    for p, e in factorize(d).factors:
        pk = p**e
        sols = sqrt_mod(-ell * ell, pk)
        if not sols:
            return []
        parts.append((pk, sols))
    return _crt_roots(parts)


def roots_minus_one(d: int) -> RootSet:
    """The complete root set of nu^2 + 1 = 0 (mod d)."""
    if d < 1:
        raise ValueError("d must be positive")
    return RootSet(d, tuple(_roots_neg_square(1, d)))


def rho(d: int) -> int:
    """Number of roots of nu^2 + 1 mod d: multiplicative, rho(p^a) = 1 + chi4(p)
    except rho(2^a) = 0 for a >= 2."""
    if d < 1:
        raise ValueError("d must be positive")
    out = 1
    for p, e in factorize(d).factors:
        if p == 2:
            if e >= 2:
                return 0
        else:
            out *= 1 + chi4(p)
            if out == 0:
                return 0
    return out


def _square_part(d: int) -> int:
    # d2 with d = d1 d2^2, d1 squarefree.
    d2 = 1
    for p, e in factorize(d).factors:
        d2 *= p ** (e // 2)
    return d2


def rho_b(b: int, d: int) -> int:
    """#{alpha mod d : alpha^2 + b^2 = 0 (mod d)} = (b, d2) rho(d/(b^2, d))."""
    if d < 1:
        raise ValueError("d must be positive")
    d2 = _square_part(d)
    g = math.gcd(b * b, d)
    return math.gcd(b, d2) * rho(d // g)


def rho_exp(k: int, ell: int, d: int) -> complex:
    """sum over roots of nu^2 + ell^2 = 0 (mod d) of e(nu k / d)."""
    if d < 1:
        raise ValueError("d must be positive")
    return sum(
        cmath.exp(2j * cmath.pi * nu * (k % d) / d) for nu in _roots_neg_square(ell, d)
    )


def rho_exp_reduced(k: int, ell: int, d: int) -> complex:
    """rho(k, ell; d) through the reduction to lower entry one.

    Writing (d, ell^2) = gamma delta^2 with gamma squarefree, d = gamma
    delta^2 d' and ell = gamma delta ell', the sum equals
    delta * rho(k' ell', 1; d') when delta | k (k = delta k') and vanishes
    otherwise.  Requires ell >= 1.
    """
    if ell < 1:
        raise ValueError("reduction requires ell >= 1")
    g = math.gcd(d, ell * ell)
    gamma, delta_ = 1, 1
    for p, e in factorize(g).factors:
        gamma *= p ** (e % 2)
        delta_ *= p ** (e // 2)
    dprime = d // g
    ellprime = ell // (gamma * delta_)
    if k % delta_:
        return 0j
    return delta_ * rho_exp(k // delta_ * ellprime, 1, dprime)


def n_sqrt(a: int, b: int) -> int:
    """#{omega mod b : omega^2 = a (mod b)}."""
    if b < 1:
        raise ValueError("b must be positive")
    count = 1
    for p, e in factorize(b).factors:
        count *= len(sqrt_mod(a, p**e))
        if count == 0:
            return 0
    return count


def _square_counts(q: int) -> np.ndarray:
    g = np.arange(q, dtype=np.int64)
    return np.bincount((g * g) % q, minlength=q)


def N_brute(a: int, q: int) -> int:
    """#{(g1, g2) mod q : a g1^2 = g2^2 (mod q)} by direct counting."""
    if q < 1:
        raise ValueError("q must be positive")
    cnt = _square_counts(q)
    g = np.arange(q, dtype=np.int64)
    return int(cnt[(a % q) * ((g * g) % q) % q].sum())


def N_formula(a: int, q: int) -> int:
    """Closed form N(a; q) = q sum_{d|q} phi(d)/d (a/d) for q odd, (a, q) = 1."""
    if q < 1 or q % 2 == 0 or math.gcd(a, q) != 1:
        raise ValueError("outside the closed form's domain: need q odd, (a, q) = 1")
    total = Fraction(0)
    for d in divisors(q):
        total += Fraction(euler_phi(d), d) * jacobi(a % d, d)
    total *= q
    assert total.denominator == 1
    return int(total)


def N_local(a: int, p: int, nu: int) -> Fraction:
    """Exact local density p^-nu N(a; p^nu).

    For p odd and (a, p) = 1 this is 1 + (1 - 1/p)([nu/2] + [(nu+1)/2](a/p));
    for p = 2 and a = 1 (mod 8) it equals nu.
    """
    if nu < 1:
        raise ValueError("nu must be >= 1")
    if p == 2:
        if a % 8 != 1:
            raise ValueError("p = 2 requires a = 1 (mod 8)")
        return Fraction(nu)
    if math.gcd(a, p) != 1:
        raise ValueError("odd p requires (a, p) = 1")
    return 1 + Fraction(p - 1, p) * (nu // 2 + (nu + 1) // 2 * jacobi(a % p, p))


def N2_brute(a: int, b: int, q: int) -> int:
    """#{(g1, g2) mod q : a g1^2 = b g2^2 (mod q)}."""
    if q < 1:
        raise ValueError("q must be positive")
    cnt = _square_counts(q)
    ca = np.bincount(np.arange(q, dtype=np.int64) * (a % q) % q, weights=cnt, minlength=q)
    cb = np.bincount(np.arange(q, dtype=np.int64) * (b % q) % q, weights=cnt, minlength=q)
    return int(round(float(np.dot(ca, cb))))


_G_SUM_CAP = 4096


def G_sum(h1: int, h2: int, z1: GaussianInt, z2: GaussianInt) -> complex:
    """G(h1, h2) = |D|^-1 sum over congruence pairs of e((g1 h1 + g2 h2)/|D|).

    The pairs (g1, g2) mod |D| satisfy g1^2 z2 = g2^2 z1 (mod |D|) with
    D the determinant; the Gaussian congruence collapses to the rational
    one through the residue t = z2/z1 mod |D|.  Enumeration is O(|D|^2),
    an oracle-grade path, so |D| is capped at 4096.
    """
    q = abs(delta(z1, z2))
    if q == 0:
        raise ValueError("determinant vanishes")
    if q > _G_SUM_CAP:
        raise ValueError(f"G_sum enumeration capped at |Delta| <= {_G_SUM_CAP}")
    t = rational_residue(z1, z2, q)
    g = np.arange(q, dtype=np.int64)
    sq = (g * g) % q
    pairs = (t * sq[:, None] - sq[None, :]) % q == 0
    ph1 = np.exp(2j * np.pi * h1 * g / q)
    ph2 = np.exp(2j * np.pi * h2 * g / q)
    return complex(ph1 @ pairs @ ph2) / q


@lru_cache(maxsize=4096)
def _square_classes(q: int):
    # distinct values of g^2 mod q with multiplicities
    g = np.arange(q, dtype=np.int64)
    us, uc = np.unique((g * g) % q, return_counts=True)
    if q < 46000:  # keys us*c*q + us*c stay inside int32
        return us.astype(np.int32), uc.astype(np.int64)
    return us, uc


def G0_brute(z1: GaussianInt, z2: GaussianInt) -> Fraction:
    """|D|^-1 #{(g1, g2) mod |D| : g1^2 z2 = g2^2 z1 (mod |D|)}.

    The congruence is tested on both coordinates directly; this is the
    independent oracle for the closed form, sharing none of its machinery.
    """
    q = abs(delta(z1, z2))
    if q == 0:
        raise ValueError("determinant vanishes")
    us, uc = _square_classes(q)
    k1 = (us * (z2.re % q) % q) * q + us * (z2.im % q) % q
    k2 = (us * (z1.re % q) % q) * q + us * (z1.im % q) % q
    order = np.argsort(k1, kind="stable")
    s1 = k1[order]
    pref = np.concatenate(([0], np.cumsum(uc[order])))
    lo = np.searchsorted(s1, k2, side="left")
    hi = np.searchsorted(s1, k2, side="right")
    return Fraction(int(np.dot(uc, pref[hi] - pref[lo])), q)


def _lemma_84_hypotheses(z1: GaussianInt, z2: GaussianInt) -> int:
    msg = "outside the closed form's domain: "
    if z1.norm() % 2 == 0 or z2.norm() % 2 == 0:
        raise ValueError(msg + "arguments must be odd")
    if not (is_primitive(z1) and is_primitive(z2)):
        raise ValueError(msg + "(z, conj z) = 1 fails")
    if ggcd(z1, z2).norm() != 1:
        raise ValueError(msg + "(z1, z2) = 1 fails")
    if (z1.re - z2.re) % 8 or (z1.im - z2.im) % 8:
        raise ValueError(msg + "z1 = z2 (mod 8) fails")
    d = delta(z1, z2)
    if d == 0:
        raise ValueError("determinant vanishes")
    return abs(d)


def G0_formula(z1: GaussianInt, z2: GaussianInt) -> Fraction:
    """Closed form G0 = 2 sum_{4d | Delta} phi(d)/d (z2/z1 / d).

    The symbol is the Jacobi symbol extended to even moduli through the
    odd part; z2/z1 is read as the rational residue mod that odd part.
    """
    q = _lemma_84_hypotheses(z1, z2)
    if q % 4:
        return Fraction(0)
    base = q // 4
    qodd = base
    while qodd % 2 == 0:
        qodd //= 2
    T = rational_residue(z1, z2, qodd) if qodd > 1 else 1
    # divisors of base with phi and odd part carried along
    divs = [(1, 1, 1)]  # (d, phi(d), odd part of d)
    for p, e in factorize(base).factors:
        pk, phis = 1, [1]
        for _ in range(e):
            phis.append((p - 1) * pk)
            pk *= p
        divs = [
            (d * p**k, ph * phis[k], dodd if p == 2 else dodd * p**k)
            for d, ph, dodd in divs
            for k in range(e + 1)
        ]
    num = 0  # running sum of (base/d) phi(d) (z2/z1 / d)
    for d, ph, dodd in divs:
        t = T % dodd if dodd > 1 else 1
        if t % 2 == 0:
            t += dodd  # odd representative of the same class mod dodd
        num += (base // d) * ph * jacobi_extended(t, d)
    return Fraction(2 * num, base)


def root_to_representation(nu: int, d: int) -> tuple[int, int]:
    """The unique (r, s) with d = r^2 + s^2, (r, s) = 1, -s < r <= s and
    nu s = r (mod d), for nu a root of nu^2 + 1 = 0 (mod d)."""
    if d < 1:
        raise ValueError("d must be positive")
    nu %= d
    if (nu * nu + 1) % d:
        raise ValueError("nu is not a root of nu^2 + 1 mod d")
    if d == 1:
        return 0, 1
    # Cornacchia descent: the first Euclid remainder below sqrt(d) is a leg.
    a, b = d, nu
    bound = math.isqrt(d)
    while b * b > d:
        a, b = b, a % b
    leg1 = b
    leg2sq = d - leg1 * leg1
    leg2 = math.isqrt(leg2sq)
    if leg2 * leg2 != leg2sq or math.gcd(leg1, leg2) != 1:
        raise ValueError("no primitive representation")
    s = max(leg1, leg2)
    rabs = min(leg1, leg2)
    for r in ((rabs, -rabs) if rabs else (0,)):
        if -s < r <= s and (nu * s - r) % d == 0:
            return r, s
    raise AssertionError(f"no sign assignment for root {nu} mod {d}")


@dataclass
class SpacingReport:
    """Outcome of the root-repulsion scan on one dyadic-style window."""

    D: int
    moduli: int
    roots: int
    pairs_checked: int
    violations: list[tuple] = field(default_factory=list)


def root_spacing_check(D: int) -> SpacingReport:
    """Verify the repulsion ||nu1/d1 - nu2/d2|| > 1/(4 sqrt(d1 d2)) for all
    distinct root pairs with 8D/9 < d <= D, matching r signs and
    2/3 <= s1/s2 <= 3/2.  All comparisons are exact integer arithmetic."""
    if D < 2:
        raise ValueError("D must be >= 2")
    lo = 8 * D // 9
    points = []
    moduli = 0
    for d in range(lo + 1, D + 1):
        rs = _roots_neg_square(1, d)
        if rs:
            moduli += 1
        for nu in rs:
            r, s = root_to_representation(nu, d)
            points.append((nu, d, r, s))
    report = SpacingReport(D=D, moduli=moduli, roots=len(points), pairs_checked=0)
    for i in range(len(points)):
        nu1, d1, r1, s1 = points[i]
        for j in range(i + 1, len(points)):
            nu2, d2, r2, s2 = points[j]
            if r1 * r2 <= 0:
                continue
            if not (2 * s2 <= 3 * s1 and 2 * s1 <= 3 * s2):
                continue
            m = (nu1 * d2 - nu2 * d1) % (d1 * d2)
            if m == 0 and nu1 * d2 == nu2 * d1:
                continue  # identical fractions are not "distinct" points
            dist = min(m, d1 * d2 - m)
            report.pairs_checked += 1
            if 16 * dist * dist <= d1 * d2:
                report.violations.append(((nu1, d1), (nu2, d2)))
    return report
