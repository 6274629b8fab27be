#!/usr/bin/env python3
"""A walk through the theta layer: exact expansions, numerics, characters.

Run as a script; each section prints what it computes.
"""

import numpy as np

from siegelz import (
    even_characteristics,
    parity,
    table1_char,
    theta_eval,
    theta_expansion,
)
from siegelz.theta import (
    E_GENERATORS,
    apply_moebius,
    character_as_gauss,
    cocycle,
    siegel_point,
    slash_character_exact,
)

print("== characteristics ==")
evens = even_characteristics(2)
print(f"{len(evens)} even characteristics in genus 2:")
print("  " + " ".join("".join(map(str, m)) for m in evens))
odd = [(1, 0, 1, 0), (0, 1, 0, 1)]
print("some odd ones:", odd, [parity(m) for m in odd])

print("\n== exact expansions (exponent unit exp(pi i tau / 4)) ==")
t = theta_expansion((0, 0), 40)
print("genus 1, characteristic 00:",
      " + ".join(f"{c.re}u^{e}" for e, c in sorted(t.coeffs.items())))
t2 = theta_expansion((0, 1, 1, 0), 12)
print(f"genus 2, characteristic 0110: {len(t2.coeffs)} terms up to order 12,")
print("  lowest:", sorted(t2.coeffs.items())[:4])

print("\n== exact matches numeric ==")
tau = siegel_point(2j, 0.5j, 2j)
for m in evens[:4]:
    exact = theta_expansion(m, 80).evaluate(np.asarray(tau))
    numeric = theta_eval(m, tau, 1e-13)
    print(f"  {''.join(map(str, m))}: series {exact:.12f}  sum {numeric:.12f}"
          f"  diff {abs(exact - numeric):.1e}")

print("\n== pair characters on the ten level-2 generators ==")
m1, m2 = (0, 0, 0, 0), (0, 1, 1, 0)
tau = siegel_point(1.9j + 0.2, 0.4j + 0.1, 2.3j - 0.15)
print(f"pair {''.join(map(str, m1))}, {''.join(map(str, m2))}:")
for i, M in enumerate(E_GENERATORS, start=1):
    closed = table1_char(m1, m2, i).to_complex()
    exact = character_as_gauss(slash_character_exact((m1, m2), M)).to_complex()
    detj = complex(np.linalg.det(cocycle(M, tau)))
    num = (theta_eval(m1, apply_moebius(M, tau)) * theta_eval(m2, apply_moebius(M, tau))
           / (theta_eval(m1, tau) * theta_eval(m2, tau) * detj))
    print(f"  e{i}: closed form {closed:+.0f}  exact {exact:+.0f}  numeric {num:+.3f}")
