"""Exact arithmetic in Z[i].

Norms, conjugation, primary normalization, primitivity, Gaussian gcd and
factorization, two-squares representations of primes, the determinant
Delta(z1, z2) = Im conj(z1) z2, and rational residues z2/z1 mod m.

A Gaussian integer z = r + is is *odd* when its norm is odd, *primitive*
when gcd(r, s) = 1, and *primary* when r is odd and s = r - 1 (mod 4);
equivalently z = 1 (mod 2(1+i)).  Exactly one associate of any odd z is
primary, the only primary unit is 1, and products of primary numbers are
primary, which makes primary numbers canonical generators of odd ideals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import factorize, is_prime, sqrt_mod

__all__ = [
    "GaussianInt",
    "ZERO",
    "ONE",
    "I",
    "norm",
    "conj",
    "mul",
    "add",
    "sub",
    "is_primary",
    "primary_associate",
    "is_primitive",
    "ggcd",
    "gaussian_factorize",
    "two_squares",
    "delta",
    "rational_residue",
    "gaussian_reps",
    "primary_reps",
]


@dataclass(frozen=True, order=True)
class GaussianInt:
    re: int
    im: int

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __repr__(self) -> str:
        return f"({self.re}{self.im:+}i)"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)

_UNITS = (ONE, I, -ONE, -I)


def norm(z: GaussianInt) -> int:
    return z.norm()


def conj(z: GaussianInt) -> GaussianInt:
    return z.conj()


def mul(z1: GaussianInt, z2: GaussianInt) -> GaussianInt:
    return z1 * z2


def add(z1: GaussianInt, z2: GaussianInt) -> GaussianInt:
    return z1 + z2


def sub(z1: GaussianInt, z2: GaussianInt) -> GaussianInt:
    return z1 - z2


def is_primary(z: GaussianInt) -> bool:
    """True iff z = 1 (mod 2(1+i)): re odd and im = re - 1 (mod 4)."""
    return z.re % 2 == 1 and (z.im - z.re + 1) % 4 == 0


def primary_associate(z: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """The unique primary associate of an odd z, with the unit that reaches it.

    Returns (w, u) with w = u*z primary and u in {1, i, -1, -i}.
    """
    if z.norm() % 2 == 0:
        raise ValueError("not odd")
    for u in _UNITS:
        w = u * z
        if is_primary(w):
            return w, u
    raise AssertionError("odd Gaussian integer with no primary associate")


def is_primitive(z: GaussianInt) -> bool:
    """True iff gcd(|re|, |im|) = 1."""
    return math.gcd(z.re, z.im) == 1


def _first_quadrant(z: GaussianInt) -> GaussianInt:
    # Associate with re > 0, im >= 0 (unique for z != 0).
    for u in _UNITS:
        w = u * z
        if w.re > 0 and w.im >= 0:
            return w
    raise AssertionError("no first-quadrant associate")


def _divmod_round(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    # Remainder of a by b with both quotient coordinates rounded to nearest.
    nb = b.norm()
    t = a * b.conj()
    q = GaussianInt((2 * t.re + nb) // (2 * nb), (2 * t.im + nb) // (2 * nb))
    return a - q * b


def ggcd(z1: GaussianInt, z2: GaussianInt) -> GaussianInt:
    """Gaussian gcd, normalized to the primary associate when odd and to
    the representative with re > 0, im >= 0 otherwise."""
    if z1 == ZERO and z2 == ZERO:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = z1, z2
    while b != ZERO:
        a, b = b, _divmod_round(a, b)
    if a.norm() % 2 == 1:
        return primary_associate(a)[0]
    return _first_quadrant(a)


def two_squares(p: int) -> tuple[int, int]:
    """The unique (r, s) with p = r^2 + s^2, r odd, r, s > 0, for p prime,
    p = 1 (mod 4).  Cornacchia's algorithm seeded with a root of -1 mod p."""
    if p % 4 != 1 or not is_prime(p):
        raise ValueError("two_squares requires a prime p = 1 (mod 4)")
    x = sqrt_mod(-1, p)[0]
    a, b = p, x
    bound = math.isqrt(p)
    while b > bound:
        a, b = b, a % b
    r, s = b, math.isqrt(p - b * b)
    assert r * r + s * s == p
    if r % 2 == 0:
        r, s = s, r
    return r, s


def gaussian_reps(n: int) -> list[GaussianInt]:
    """All w in Z[i] with |w|^2 = n, by direct scan (oracle-grade)."""
    out = []
    for u in range(-math.isqrt(n), math.isqrt(n) + 1):
        v2 = n - u * u
        v = math.isqrt(v2)
        if v * v == v2:
            out.append(GaussianInt(u, v))
            if v:
                out.append(GaussianInt(u, -v))
    return sorted(out)


def primary_reps(n: int) -> list[GaussianInt]:
    """All primary z with norm n, enumerated through the factorization of n.

    Empty unless n is odd and every prime q = 3 (mod 4) divides n to an
    even power.  The list has prod (e_p + 1) entries over p = 1 (mod 4).
    """
    if n < 1:
        raise ValueError("primary_reps requires n >= 1")
    if n % 2 == 0:
        return []
    reps = [ONE]
    for p, e in factorize(n).factors:
        if p % 4 == 3:
            if e % 2 == 1:
                return []
            q = GaussianInt(-p, 0)  # -p is the primary associate of p
            reps = [z * _power(q, e // 2) for z in reps]
        else:
            r, s = two_squares(p)
            pi = primary_associate(GaussianInt(r, s))[0]
            pibar = pi.conj()
            reps = [
                z * _power(pi, j) * _power(pibar, e - j)
                for z in reps
                for j in range(e + 1)
            ]
    return sorted(set(reps))


def _power(z: GaussianInt, e: int) -> GaussianInt:
    w = ONE
    for _ in range(e):
        w = w * z
    return w


def gaussian_factorize(z: GaussianInt) -> list[tuple[GaussianInt, int]]:
    """Factor a primary z into primary Gaussian primes.

    Returns [(pi, e), ...] with every pi primary and prime in Z[i], sorted
    by (norm, re, im); the product of pi^e equals z exactly because both
    sides are primary generators of the same ideal.
    """
    if not is_primary(z):
        raise ValueError("gaussian_factorize requires a primary argument")
    out: list[tuple[GaussianInt, int]] = []
    rest = z
    for p, e in factorize(z.norm()).factors:
        if p % 4 == 3:
            pi = GaussianInt(-p, 0)  # the primary associate of p
            assert e % 2 == 0
            out.append((pi, e // 2))
            for _ in range(e // 2):
                rest = _exact_div(rest, pi)
        else:
            r, s = two_squares(p)
            pi = primary_associate(GaussianInt(r, s))[0]
            e1 = 0
            while True:
                q = _try_div(rest, pi)
                if q is None:
                    break
                rest = q
                e1 += 1
            if e1:
                out.append((pi, e1))
            if e - e1:
                pibar = pi.conj()
                out.append((pibar, e - e1))
                for _ in range(e - e1):
                    rest = _exact_div(rest, pibar)
    assert rest == ONE, "factorization did not exhaust the argument"
    return sorted(out, key=lambda t: (t[0].norm(), t[0].re, t[0].im))


def _try_div(a: GaussianInt, b: GaussianInt) -> GaussianInt | None:
    nb = b.norm()
    t = a * b.conj()
    if t.re % nb or t.im % nb:
        return None
    return GaussianInt(t.re // nb, t.im // nb)


def _exact_div(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    q = _try_div(a, b)
    if q is None:
        raise ArithmeticError("non-exact Gaussian division")
    return q


def delta(z1: GaussianInt, z2: GaussianInt) -> int:
    """Determinant Im conj(z1) z2 = r1 s2 - r2 s1."""
    return z1.re * z2.im - z2.re * z1.im


def rational_residue(z1: GaussianInt, z2: GaussianInt, m: int) -> int:
    """The t mod m with z2 = t z1 (mod m) componentwise.

    Exists iff m divides delta(z1, z2); requires gcd(|z1|^2, m) = 1.  The
    result is re-verified componentwise before returning.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    n1 = z1.norm()
    if math.gcd(n1, m) != 1:
        raise ValueError("non-invertible")
    t = (z1.re * z2.re + z1.im * z2.im) * pow(n1, -1, m) % m
    if (z2.re - t * z1.re) % m or (z2.im - t * z1.im) % m:
        raise ValueError("z2/z1 is not rational modulo m")
    return t
