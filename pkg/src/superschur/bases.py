"""Multiplicative bases and the four super-Schur families.

The generators ``h_n, e_n`` and their odd partners ``ht_n, et_n`` are the
coefficients of the exponential generating series in the power sums; they are
built from closed multinomial sums.  Super-Schur functions are *defined* by
strings of Bernstein modes acting on 1 (see :mod:`superschur.operators`) and
memoised in a :class:`SchurTable`.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .superalgebra import (SuperPolynomial, linear_combination, one, scalar_product,
                           theta, zero)
from .superpartitions import (SuperPartition, aut_order, enumerate_superpartitions,
                              partitions)


class IncompleteBasis(LookupError):
    """A requested bidegree block lies outside the table's bounds."""


class SchurType(enum.Enum):
    I = "I"
    Istar = "Istar"
    II = "II"
    IIstar = "IIstar"

    @property
    def dual(self) -> "SchurType":
        return {SchurType.I: SchurType.Istar, SchurType.Istar: SchurType.I,
                SchurType.II: SchurType.IIstar, SchurType.IIstar: SchurType.II}[self]

    @classmethod
    def parse(cls, text: str) -> "SchurType":
        key = text.strip().replace("*", "star")
        for member in cls:
            if member.value.lower() == key.lower():
                return member
        raise ValueError(f"unknown Schur type {text!r}")


# -- generators --------------------------------------------------------------

@lru_cache(maxsize=None)
def homogeneous(n: int) -> SuperPolynomial:
    """h_n = sum over partitions of x_lambda / |Aut(lambda)|."""
    if n < 0:
        return zero()
    return SuperPolynomial({((), lam): Fraction(1, aut_order(lam)) for lam in partitions(n)})


@lru_cache(maxsize=None)
def elementary(n: int) -> SuperPolynomial:
    if n < 0:
        return zero()
    return SuperPolynomial({((), lam): Fraction((-1) ** (n - len(lam)), aut_order(lam))
                            for lam in partitions(n)})


@lru_cache(maxsize=None)
def homogeneous_tilde(n: int) -> SuperPolynomial:
    """Odd partner of h_n: sum_{k>=1} theta_k h_{n-k+1}."""
    if n < 0:
        return zero()
    return linear_combination((1, theta(k) * homogeneous(n - k + 1)) for k in range(1, n + 2))


@lru_cache(maxsize=None)
def elementary_tilde(n: int) -> SuperPolynomial:
    if n < 0:
        return zero()
    return linear_combination(((-1) ** (k + 1), theta(k) * elementary(n - k + 1))
                              for k in range(1, n + 2))


h, e, ht, et = homogeneous, elementary, homogeneous_tilde, elementary_tilde


def _product(factors) -> SuperPolynomial:
    out = one()
    for f in factors:
        out = out * f
    return out


@lru_cache(maxsize=None)
def power_sum_basis(sp: SuperPartition) -> SuperPolynomial:
    """theta_{a1+1} ... theta_{am+1} x_{s1} x_{s2} ..., canonically reordered."""
    return SuperPolynomial.monomial([a + 1 for a in sp.antisymmetric_parts], sp.symmetric_parts)


@lru_cache(maxsize=None)
def h_check_basis(sp: SuperPartition) -> SuperPolynomial:
    return _product([theta(a + 1) for a in sp.antisymmetric_parts]
                    + [homogeneous(s) for s in sp.symmetric_parts])


@lru_cache(maxsize=None)
def h_basis(sp: SuperPartition) -> SuperPolynomial:
    return _product([homogeneous_tilde(a) for a in sp.antisymmetric_parts]
                    + [homogeneous(s) for s in sp.symmetric_parts])


@lru_cache(maxsize=None)
def e_basis(sp: SuperPartition) -> SuperPolynomial:
    return _product([elementary_tilde(a) for a in sp.antisymmetric_parts]
                    + [elementary(s) for s in sp.symmetric_parts])


# -- super-Schur functions ---------------------------------------------------

MODE_LETTER = {SchurType.I: "B", SchurType.Istar: "C",
               SchurType.II: "Bbar", SchurType.IIstar: "Cbar"}


def operator_string(kind: SchurType, sp: SuperPartition) -> str:
    """Mode string such as ``"B4^1 B3^0 B2^0 B2^0 B1^1"``."""
    letter = MODE_LETTER[kind]
    return " ".join(f"{letter}{length}^{int(circ)}" for length, circ in sp.rows())


class SchurTable:
    """Grow-only cache of super-Schur expansions, filled block by block.

    ``max_total``/``max_fermionic`` bound the blocks that may be populated;
    asking beyond them raises :class:`IncompleteBasis`.
    """

    def __init__(self, max_total: int | None = None, max_fermionic: int | None = None):
        self.max_total = max_total
        self.max_fermionic = max_fermionic
        self._entries: dict[tuple[SchurType, SuperPartition], SuperPolynomial] = {}

    def _check(self, bidegree):
        n, m = bidegree
        if (self.max_total is not None and n > self.max_total) or \
                (self.max_fermionic is not None and m > self.max_fermionic):
            raise IncompleteBasis(f"bidegree {bidegree} exceeds table bounds "
                                  f"({self.max_total}, {self.max_fermionic})")

    def get(self, kind: SchurType, sp: SuperPartition) -> SuperPolynomial:
        key = (kind, sp)
        hit = self._entries.get(key)
        if hit is None:
            self._check(sp.bidegree)
            hit = build_schur(kind, sp)
            self._entries[key] = hit
        return hit

    def block(self, kind: SchurType, bidegree: tuple[int, int]) -> dict[SuperPartition, SuperPolynomial]:
        self._check(bidegree)
        return {sp: self.get(kind, sp) for sp in enumerate_superpartitions(*bidegree)}

    def gram_matrix(self, kind: SchurType, bidegree: tuple[int, int]) -> list[list[Fraction]]:
        """Pairings <s_L, s*_M> between a family and its dual on one block."""
        rows = self.block(kind, bidegree)
        cols = self.block(kind.dual, bidegree)
        return [[scalar_product(f, g) for g in cols.values()] for f in rows.values()]


def build_schur(kind: SchurType, sp: SuperPartition) -> SuperPolynomial:
    """Apply the family's mode string to 1, innermost (last row) first."""
    from . import operators

    mode = operators.MODES[kind]
    f = one()
    for length, circ in reversed(sp.rows()):
        f = mode(length, int(circ))(f)
    return f


default_table = SchurTable()


def schur(kind: SchurType | str, sp: SuperPartition | str,
          table: SchurTable | None = None) -> SuperPolynomial:
    from .superpartitions import parse

    if isinstance(kind, str):
        kind = SchurType.parse(kind)
    if isinstance(sp, str):
        sp = parse(sp)
    return (table or default_table).get(kind, sp)


def expand_in_schur(f: SuperPolynomial, kind: SchurType | str,
                    table: SchurTable | None = None, check: bool = False) -> dict[SuperPartition, Fraction]:
    """Coefficients of f in one family, read off by pairing with the dual family."""
    if isinstance(kind, str):
        kind = SchurType.parse(kind)
    table = table or default_table
    out: dict[SuperPartition, Fraction] = {}
    for bidegree, part in f.components().items():
        for sp, dual in table.block(kind.dual, bidegree).items():
            c = scalar_product(part, dual)
            if c:
                out[sp] = c
    if check:
        rebuilt = reconstruct(out, kind, table)
        if rebuilt != f:
            raise ArithmeticError("Schur expansion does not reconstruct its input")
    return dict(sorted(out.items(), key=lambda kv: kv[0].sort_key()))


def reconstruct(coeffs: Mapping[SuperPartition, Fraction], kind: SchurType,
                table: SchurTable | None = None) -> SuperPolynomial:
    table = table or default_table
    return linear_combination((c, table.get(kind, sp)) for sp, c in coeffs.items())


def render_expansion(coeffs: Mapping[SuperPartition, Fraction]) -> str:
    """Lines ``(Lambda): coefficient`` in canonical superpartition order."""
    if not coeffs:
        return "0"
    return "\n".join(f"({sp}): {c}" for sp, c in sorted(coeffs.items(), key=lambda kv: kv[0].sort_key()))
