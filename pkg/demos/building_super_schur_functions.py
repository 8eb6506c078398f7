"""
Building super-Schur functions from Bernstein modes
===================================================

Each row of a superpartition diagram becomes one mode, bosonic rows an even
mode and rows ending in a circle an odd one.  Applying the string to 1, last
row first, produces the super-Schur function.
"""

from superschur import apply_string, operator_string, parse, render, schur
from superschur import SchurType, expand_in_schur, scalar_product

lam = parse("4,1;3,2,2")
print("diagram rows (length, circle):", lam.rows())
print("mode string:", operator_string(SchurType.I, lam))

# the string builds the same function the cache holds
f = apply_string(operator_string(SchurType.I, lam))
assert f == schur("I", lam)
print("number of power-sum terms:", len(f))

# a small one, written out in power sums
print("s_(0;3) =", render(schur("I", "0;3")))

# the starred family is dual to it for the scalar product
for other in ("1,0;1", "2,1;", "0;2,1"):
    print(f"<s_(1,0;1), s*_({other})> =", scalar_product(schur("I", "1,0;1"), schur("Istar", other)))

# re-expanding a product in the Schur basis reads off a Pieri rule
from superschur import theta
from superschur.bases import render_expansion
print(render_expansion(expand_in_schur(theta(4) * schur("I", "0;3"), "I")))
