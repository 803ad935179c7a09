"""Real character machinery on Z[i].

The Dirichlet symbol xi_w(z) = (Re wz / |w|^2) attached to a primary
primitive w extends the Jacobi symbol to the Gaussian domain: it is a real
character mod |w|^2, computable equivalently through any root omega of
omega^2 + 1 = 0 (mod q) as ((r + omega*s)/q).  The quartic-valued
Jacobi-Kubota symbol [z] = i^((r-1)/2) (s/|r|) is nearly multiplicative:
for w primary primitive and z = 1 (mod 2),

    [wz] = eps(w, z) [w] [z] (z/w),

where eps = +-1 depends only on signs (the multiplier rule).  All symbol
arithmetic here is exact; quartic values are a five-element enumeration,
never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import jacobi
from .gaussian import (
    GaussianInt,
    ONE,
    conj,
    ggcd,
    is_primary,
    is_primitive,
    primary_associate,
    two_squares,
)

__all__ = [
    "QuarticValue",
    "QUARTIC_ZERO",
    "QUARTIC_ONE",
    "QUARTIC_I",
    "QUARTIC_MINUS_ONE",
    "QUARTIC_MINUS_I",
    "dirichlet_symbol",
    "dirichlet_symbol_via_root",
    "jacobi_kubota",
    "epsilon_factor",
    "spin",
    "primary_gcd_cofactor",
]


@dataclass(frozen=True)
class QuarticValue:
    """Exact element of {0, 1, i, -1, -i} with its own multiplication."""

    re: int
    im: int

    def __post_init__(self):
        if (self.re, self.im) not in {(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)}:
            raise ValueError("not a fourth root of unity or zero")

    def __mul__(self, other: "QuarticValue") -> "QuarticValue":
        return QuarticValue(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    @classmethod
    def from_i_power(cls, k: int) -> "QuarticValue":
        return (QUARTIC_ONE, QUARTIC_I, QUARTIC_MINUS_ONE, QUARTIC_MINUS_I)[k % 4]

    @classmethod
    def from_sign(cls, s: int) -> "QuarticValue":
        return (QUARTIC_MINUS_ONE, QUARTIC_ZERO, QUARTIC_ONE)[s + 1]

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


QUARTIC_ZERO = QuarticValue(0, 0)
QUARTIC_ONE = QuarticValue(1, 0)
QUARTIC_I = QuarticValue(0, 1)
QUARTIC_MINUS_ONE = QuarticValue(-1, 0)
QUARTIC_MINUS_I = QuarticValue(0, -1)


def _require_primary_primitive(w: GaussianInt) -> int:
    if not (is_primary(w) and is_primitive(w)):
        raise ValueError("lower entry must be primary and primitive")
    q = w.norm()
    # Every prime factor of q splits, so q = 1 (mod 4); q mod 8 in {1, 5}.
    assert q % 4 == 1, "primary primitive norm must be 1 mod 4"
    return q


def dirichlet_symbol(z: GaussianInt, w: GaussianInt) -> int:
    """xi_w(z) = (Re wz / |w|^2) for w primary primitive.

    Vanishes exactly when gcd(w, conj(z)) != 1.
    """
    q = _require_primary_primitive(w)
    a = w.re * z.re - w.im * z.im  # Re(w z)
    return jacobi(a % q, q)


def dirichlet_symbol_via_root(z: GaussianInt, q: int, omega: int) -> int:
    """xi(z) = ((r + omega s)/q) for a root omega of omega^2 + 1 = 0 (mod q)."""
    if q < 1 or q % 2 == 0:
        raise ValueError("modulus must be odd and positive")
    if (omega * omega + 1) % q:
        raise ValueError("omega is not a root of x^2 + 1 mod q")
    return jacobi((z.re + omega * z.im) % q, q)


def jacobi_kubota(z: GaussianInt) -> QuarticValue:
    """[z] = i^((r-1)/2) (s/|r|) for z = r + is with r odd.

    Zero exactly when z is not primitive (for r = +-1 the symbol (s/1) = 1).
    """
    r, s = z.re, z.im
    if r % 2 == 0:
        raise ValueError("real part must be odd")
    j = jacobi(s, abs(r))
    if j == 0:
        return QUARTIC_ZERO
    return QuarticValue.from_i_power((r - 1) // 2) * QuarticValue.from_sign(j)


def epsilon_factor(w: GaussianInt, z: GaussianInt) -> int:
    """Sign epsilon(w, z) in the multiplier rule, from the quadrants of w, z, wz.

    With w = u + iv and z = r + is this is (u,v)_inf (r,-v)_inf when
    ur > vs and (u,v)_inf (-r,v)_inf when ur < vs; the case ur = vs cannot
    occur for wz = 1 (mod 2) and is rejected.
    """
    u, v, r, s = w.re, w.im, z.re, z.im
    a = u * r - v * s  # Re(w z)
    if a == 0:
        raise ValueError("degenerate: Re(wz) = 0")

    def hil(x, y):
        if x == 0 or y == 0:
            # Hilbert factors appear only with nonzero entries here; a zero
            # coordinate (axis point) counts as positive.
            return 1
        return -1 if (x < 0 and y < 0) else 1

    if a > 0:
        return hil(u, v) * hil(r, -v)
    return hil(u, v) * hil(-r, v)


def epsilon_factor_sign_form(w: GaussianInt, z: GaussianInt) -> int:
    """Same sign via 2 eps (u,v)_inf = 1 + sign(vr) - (sign v - sign r) sign(Re wz).

    The sign form needs Im w and Re z away from zero (its Hilbert factors
    have nonzero entries); use epsilon_factor on the axes.
    """
    u, v, r, s = w.re, w.im, z.re, z.im
    if v == 0 or r == 0:
        raise ValueError("sign form undefined for Im w = 0 or Re z = 0")
    a = u * r - v * s
    if a == 0:
        raise ValueError("degenerate: Re(wz) = 0")
    sgn = lambda t: (t > 0) - (t < 0)
    huv = -1 if (u < 0 and v < 0) else 1
    rhs = 1 + sgn(v * r) - (sgn(v) - sgn(r)) * sgn(a)
    assert abs(rhs) == 2, "sign identity out of range"
    return (rhs // 2) * huv


def spin(p: int) -> int:
    """Spin (s/r) of a prime p = 1 (mod 4) with p = r^2 + s^2, r odd, r,s > 0."""
    r, s = two_squares(p)
    return jacobi(s, r) if r > 1 else 1


def primary_gcd_cofactor(
    w1: GaussianInt, w2: GaussianInt
) -> tuple[GaussianInt, GaussianInt]:
    """(e, w1 w2 / (e conj(e))) with e the primary associate of gcd(w1, conj(w2)).

    For primary primitive w1, w2 the cofactor is again primary primitive;
    it is the canonical lower entry in the product law for xi.
    """
    _require_primary_primitive(w1)
    _require_primary_primitive(w2)
    e = ggcd(w1, conj(w2))  # odd, hence already primary-normalized
    if not is_primary(e):
        e = primary_associate(e)[0]
    d = e.norm()  # e conj(e) = d as a Gaussian integer
    prod = w1 * w2
    assert prod.re % d == 0 and prod.im % d == 0
    cof = GaussianInt(prod.re // d, prod.im // d)
    assert is_primary(cof) and is_primitive(cof)
    return e, cof
