"""
Dualities and negative modes
============================

omega, rho and phi = omega rho relate the four families.  The negative
modes run the construction backwards, removing one column at a time.
"""

from math import comb

from superschur import SchurType, omega, phi, rho, schur
from superschur.operators import stripping_string
from superschur.superalgebra import one
from superschur.superpartitions import parse

lam = parse("2,0;1")
conj = lam.conjugate()
sign = -1 if comb(lam.fermionic_degree, 2) % 2 else 1
print(f"({lam})' = ({conj}), sign {sign}")

assert rho(schur("I", lam)) == sign * schur("I", conj)
assert phi(schur("I", lam)) == schur("IIstar", lam)

# with two circles omega only gets there up to the same sign
print("s*  == omega(sbar'):", schur("Istar", lam) == omega(schur("II", conj)))
print("s*  == sign * omega(sbar'):", schur("Istar", lam) == sign * omega(schur("II", conj)))

# stripping columns with the L modes brings s_lam back to +-1
f = schur(SchurType.I, lam)
for op in reversed(stripping_string("L", lam)):
    f = op(f)
    print(op.name, "->", len(f), "terms")
assert f == (-1) ** lam.total_degree * one()
