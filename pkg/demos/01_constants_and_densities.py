#!/usr/bin/env python3
"""Constants of the a^2 + b^4 problem: the area constant kappa and the
singular series 4/pi, plus the local densities g(d) that drive the sieve.

kappa = int_0^1 sqrt(1 - t^4) dt is the area under the quartic arc; the
count A(x) of lattice points (a, c) with 0 < a^2 + c^4 <= x grows like
4 kappa x^(3/4).  The product over primes of (1 - chi4(p)/p) converges to
4/pi = 1/L(1, chi4), the "probability correction" that turns the lattice
count into the expected count of prime values.
"""

import math

from spinsieve import sieve

print("=== the area constant ===")
kq, kc = sieve.kappa(), sieve.kappa_closed_form()
print(f"quadrature        : {kq:.12f}")
print(f"Gamma(1/4)^2/(6 sqrt(2 pi)): {kc:.12f}")
print(f"difference        : {abs(kq - kc):.2e}")

print()
print("=== lattice count vs 4 kappa x^(3/4) ===")
for x in (10**3, 10**4, 10**5, 10**6):
    ax = sieve.A(x)
    main = 4 * kc * x**0.75
    print(f"x = {x:>9,}   A(x) = {ax:>9,}   main term = {main:>12.1f}   "
          f"defect/sqrt(x) = {(ax - main) / math.sqrt(x):+.3f}")

print()
print("=== Euler product -> 4/pi ===")
for P in (10, 10**2, 10**3, 10**4, 10**5, 10**6):
    hp = sieve.H_partial(P)
    print(f"P = {P:>9,}   product = {hp:.8f}   4/pi - product = {4/math.pi - hp:+.2e}")

print()
print("=== local densities g(d) (exact rationals) ===")
print("d : g(d)      interpretation")
for d in (2, 3, 4, 5, 9, 13, 25, 49):
    print(f"{d:>2} : {str(sieve.g(d)):>8}   h(d) = {sieve.h(d)}")
print()
print("inert primes force p | a and p | b, so g(p) = 1/p^2 there;")
print("split primes get the full 1 + chi4(p)(1 - 1/p) mass.")
