"""
Pieri rules and their oracle
============================

The combinatorial rules move circles around while a strip is added.  The
oracle multiplies in the ring and re-expands, so every rule can be checked
on any example.
"""

from superschur.pieri import check_rule, decorate, pieri_e_Istar, pieri_theta_I
from superschur.superpartitions import parse, superpartitions_up_to

# multiplying by e_2 bumps the circle of (2;1) down when a box lands on it
base = parse("2;1")
for target, coeff in pieri_e_Istar(2, base).items():
    print(f"({target}): {coeff}")
    print(decorate(base, target).render())
    print()

# theta_r adds a new circle; a minus sign for each circle above it
print(pieri_theta_I(1, parse("2;")))

# sweep a grid against the oracle
grid = [(rule, r, lam) for rule in ("eI", "thetaI", "hIstar", "eIstar")
        for lam in superpartitions_up_to(3, 2) for r in range(1, 4)]
bad = [case for case in grid if not check_rule(*case)]
print(f"{len(grid)} rule applications checked, {len(bad)} disagreements")
