#!/usr/bin/env python3
"""Derive the flattened single-generator data for the D8 fixture.

The fixture field is the degree-8 extension Q(theta, i) with theta^4 = 2.
The CLI and library work with a single-generator presentation K = Q[t]/(m),
so this script flattens the tower through the primitive element g = theta + i:

  * m          -- the minimal polynomial of g over Q,
  * theta, i   -- expressed as coefficient vectors over the power basis of g,
  * r, s       -- the two field automorphisms (r: theta -> i*theta, i -> i
                  and s: theta -> theta, i -> -i) as images of g,
  * alpha      -- the normal element (1 + theta + theta^2 + theta^3)(1 + i).

Run once; the printed vectors are committed in the Rust fixtures and in
crates/noname-cli/fixtures/d8.json.  Everything is exact (sympy rationals).
"""

import sympy as sp

x = sp.Symbol("x")
theta = sp.root(2, 4)
i = sp.I
g = theta + i

# Minimal polynomial of the primitive element.
m = sp.minimal_polynomial(g, x)
print("m(x) =", sp.expand(m))
coeffs = sp.Poly(m, x).all_coeffs()[::-1]  # ascending
print("m coeffs (ascending):", coeffs)

# Tower basis theta^a * i^b, a in 0..3, b in 0..1.
basis = [theta**a * i**b for b in range(2) for a in range(4)]

T = sp.Symbol("T")  # stands for 2^(1/4)

def coords(expr):
    """Coordinates of expr over the tower basis, as exact rationals."""
    e = sp.expand(expr)
    re, im = e.as_real_imag()
    out = []
    for b in range(2):
        part = sp.expand(re if b == 0 else im)
        part = part.subs(
            {2 ** sp.Rational(3, 4): T**3, sp.sqrt(2): T**2, 2 ** sp.Rational(1, 4): T}
        )
        poly = sp.Poly(part, T)
        cs = [sp.Rational(0)] * 4
        for mono, c in zip(poly.monoms(), poly.coeffs()):
            deg = mono[0]
            assert deg < 4, (expr, part, deg)
            cs[deg] = sp.Rational(c)
        out.extend(cs)
    return out

# Change of basis: columns are coords of g^k.
C = sp.Matrix([coords(g**k) for k in range(8)]).T
Cinv = C.inv()

def in_gamma_powers(expr):
    v = sp.Matrix(coords(expr))
    return list(Cinv * v)

def check(expr, vec):
    rebuilt = sum(c * g**k for k, c in enumerate(vec))
    assert sp.simplify(sp.expand(rebuilt - expr)) == 0

for name, expr in [
    ("theta", theta),
    ("i", i),
    ("r(g) = i*theta + i", i * theta + i),
    ("s(g) = theta - i", theta - i),
    ("alpha", (1 + theta + theta**2 + theta**3) * (1 + i)),
]:
    vec = in_gamma_powers(expr)
    check(expr, vec)
    print(f"{name}: {vec}")

# Sanity: the automorphism images are roots of m.
for name, expr in [("r(g)", i * theta + i), ("s(g)", theta - i)]:
    val = sp.simplify(m.subs(x, expr))
    assert sp.expand(val) == 0, (name, val)
print("automorphism images verified as roots of m")
