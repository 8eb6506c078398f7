"""Combinatorial Pieri rules for super-Schur functions, and their oracle.

Diagrams are handled as lists of rows ``(length, has_circle)`` read from the
top; a circle sits just right of the last box of its row.  Each rule first
enumerates the strip added to ``star(Lambda)`` and then decides where the
circles go.  :func:`oracle_product` multiplies in the ring and re-expands, and
is the ground truth all four rules are tested against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .bases import (SchurType, elementary, elementary_tilde, expand_in_schur,
                    homogeneous, homogeneous_tilde, schur)
from .superalgebra import theta
from .superpartitions import SuperPartition, enumerate_superpartitions, from_rows

SignedExpansion = dict  # SuperPartition -> int


# -- strips ------------------------------------------------------------------

def vertical_strips(shape: tuple[int, ...], r: int) -> Iterator[tuple[int, ...]]:
    """Partitions mu containing shape with mu/shape a vertical r-strip."""
    rows = len(shape) + r
    padded = list(shape) + [0] * r
    for chosen in combinations(range(rows), r):
        mu = padded[:]
        for i in chosen:
            mu[i] += 1
        if all(mu[i] >= mu[i + 1] for i in range(rows - 1)):
            yield tuple(v for v in mu if v)


def horizontal_strips(shape: tuple[int, ...], r: int) -> Iterator[tuple[int, ...]]:
    """Partitions mu containing shape with mu/shape a horizontal r-strip."""
    padded = list(shape) + [0]

    def rec(i: int, left: int, acc: list[int]):
        if i == len(padded):
            if left == 0:
                yield tuple(v for v in acc if v)
            return
        cap = left if i == 0 else min(left, padded[i - 1] - padded[i])
        for add in range(cap, -1, -1):
            yield from rec(i + 1, left - add, acc + [padded[i] + add])

    yield from rec(0, r, [])


def _pad(shape, n):
    return list(shape) + [0] * (n - len(shape))


def _circle_layouts(star: tuple[int, ...], m: int) -> Iterator[tuple[list[tuple[int, bool]], SuperPartition]]:
    """Every valid diagram with the given star shape and m circles."""
    rows = len(star) + 1
    lengths = _pad(star, rows)
    for chosen in combinations(range(rows), m):
        layout = [(lengths[i], i in chosen) for i in range(rows)]
        if layout[-1] == (0, False):
            layout = layout[:-1]
        sp = from_rows(layout)
        if sp is not None:
            yield layout, sp


def _circles(rows) -> list[tuple[int, int]]:
    return [(i, length) for i, (length, c) in enumerate(rows) if c]


# -- decorated diagrams --------------------------------------------------------

@dataclass
class DecoratedDiagram:
    """A result diagram with the cells and circles that changed marked."""
    base: SuperPartition
    result: SuperPartition
    removed_cells: frozenset = field(default_factory=frozenset)
    added_cells: frozenset = field(default_factory=frozenset)
    circle_rows: tuple = ()
    moved_flags: frozenset = field(default_factory=frozenset)

    def render(self) -> str:
        """ASCII drawing: [ ] box, ( ) circle, [+] added box, [x] removed box,
        (!) circle displaced from its original row."""
        lines = []
        shape = self.result.rows()
        height = max(len(shape), 1 + max((i for i, _ in self.removed_cells), default=-1))
        for i in range(height):
            length, circ = shape[i] if i < len(shape) else (0, False)
            width = max([length] + [j + 1 for k, j in self.removed_cells if k == i])
            cells = []
            for j in range(width):
                if (i, j) in self.removed_cells:
                    cells.append("[x]")
                elif (i, j) in self.added_cells:
                    cells.append("[+]")
                else:
                    cells.append("[ ]")
            if circ:
                cells.append("(!)" if i in self.moved_flags else "( )")
            lines.append("".join(cells) or ".")
        return "\n".join(lines)


def _added(old_star, new_star) -> frozenset:
    old = _pad(old_star, len(new_star))
    return frozenset((i, j) for i, length in enumerate(new_star) for j in range(old[i], length))


def decorate(base: SuperPartition, result: SuperPartition) -> DecoratedDiagram:
    """Mark the cells of result not in base, and circles that changed row."""
    old_rows = {i for i, _ in base.circle_cells()}
    new_rows = tuple(i for i, _ in result.circle_cells())
    old_star = _pad(base.star(), max(len(base.star()), len(result.star())))
    new_star = _pad(result.star(), len(old_star))
    removed = frozenset((i, j) for i, length in enumerate(old_star)
                        for j in range(new_star[i], length))
    return DecoratedDiagram(base, result, removed_cells=removed,
                            added_cells=_added(base.star(), result.star()),
                            circle_rows=new_rows,
                            moved_flags=frozenset(i for i in new_rows if i not in old_rows))


# -- e_r s_Lambda -------------------------------------------------------------

def _e_I_move_ok(old: tuple[int, int], new: tuple[int, int], star: tuple[int, ...]) -> bool:
    (i, c), (k, d) = old, new
    if k == i:
        return d in (c, c + 1)
    if d != c:
        return False
    # vertical slide: free in the first column, otherwise needs a box of the
    # original diagram immediately to the left in the landing row
    return c == 0 or (k < len(star) and star[k] >= c)


def pieri_e_I(r: int, sp: SuperPartition) -> SignedExpansion:
    """e_r s_Lambda: vertical r-strip, circles slide per the type I rules."""
    out: SignedExpansion = {}
    star = sp.star()
    old = _circles(sp.rows())
    for mu in vertical_strips(star, r):
        for layout, omega in _circle_layouts(mu, sp.fermionic_degree):
            new = _circles(layout)
            if all(_e_I_move_ok(a, b, star) for a, b in zip(old, new)):
                out[omega] = 1
    return _sorted(out)


# -- theta_r s_Lambda -----------------------------------------------------------

def _theta_move_ok(old: tuple[int, int], new: tuple[int, int], star: tuple[int, ...]) -> bool:
    (i, c), (k, d) = old, new
    if d == c and k in (i, i + 1):
        return True
    if k != i:
        return False
    if i == 0:
        return True
    # horizontal slide along row i needs a box of the original row above
    return star[i - 1] > d if i - 1 < len(star) else False


def pieri_theta_I(r: int, sp: SuperPartition) -> SignedExpansion:
    """theta_r s_Lambda: horizontal (r-1)-strip plus a new circle at its right end.

    Sign is (-1) to the number of circles above the new one.
    """
    if r < 1:
        return {}
    out: SignedExpansion = {}
    star = sp.star()
    old = _circles(sp.rows())
    for mu in horizontal_strips(star, r - 1):
        added = _added(star, mu)
        right_edge = max((j for _, j in added), default=-1)
        for layout, omega in _circle_layouts(mu, sp.fermionic_degree + 1):
            new = _circles(layout)
            signs = set()
            for pos in range(len(new)):
                row, col = new[pos]
                if col <= right_edge:
                    continue
                rest = new[:pos] + new[pos + 1:]
                if all(_theta_move_ok(a, b, star) for a, b in zip(old, rest)):
                    signs.add(-1 if pos % 2 else 1)
            if len(signs) > 1:
                raise AssertionError(f"ambiguous theta-rule sign for {sp} -> {omega}")
            if signs:
                out[omega] = signs.pop()
    return _sorted(out)


# -- h_r s*_Lambda --------------------------------------------------------------

def pieri_h_Istar(r: int, sp: SuperPartition) -> SignedExpansion:
    """h_r s*_Lambda: horizontal r-strip; a circle drops one row iff its row grew."""
    out: SignedExpansion = {}
    star = sp.star()
    old_rows = [i for i, _ in _circles(sp.rows())]
    for mu in horizontal_strips(star, r):
        grown = {i for i, _ in _added(star, mu)}
        new_rows = {i + 1 if i in grown else i for i in old_rows}
        if len(new_rows) != len(old_rows):
            continue
        lengths = _pad(mu, max([len(mu)] + [k + 1 for k in new_rows]))
        omega = from_rows([(lengths[k], k in new_rows) for k in range(len(lengths))])
        if omega is not None:
            out[omega] = 1
    return _sorted(out)


# -- e_r s*_Lambda --------------------------------------------------------------

def pieri_e_Istar(r: int, sp: SuperPartition) -> SignedExpansion:
    """e_r s*_Lambda: vertical r-strip; a box landing on a circle bumps it
    down to the first later row that receives no box, which must be bosonic."""
    out: SignedExpansion = {}
    star = sp.star()
    rows = sp.rows()
    old_rows = [i for i, _ in _circles(rows)]
    for mu in vertical_strips(star, r):
        grown = {i for i, _ in _added(star, mu)}
        new_rows = []
        ok = True
        for i in old_rows:
            k = i
            while k in grown:
                k += 1
            if k != i and k in old_rows:
                ok = False  # landed on a fermionic row that keeps its circle
                break
            new_rows.append(k)
        if not ok or len(set(new_rows)) != len(new_rows):
            continue
        lengths = _pad(mu, max([len(mu)] + [k + 1 for k in new_rows]))
        omega = from_rows([(lengths[k], k in new_rows) for k in range(len(lengths))])
        if omega is not None:
            out[omega] = 1
    return _sorted(out)


# -- first-row circle ----------------------------------------------------------

def strip_first_circle(sp: SuperPartition) -> SuperPartition | None:
    """Remove the circle of the first row; None when that row is bosonic."""
    rows = sp.rows()
    if not rows or not rows[0][1]:
        return None
    return from_rows([(rows[0][0], False)] + rows[1:]) if rows[0][0] else from_rows(rows[1:])


def add_first_circle(sp: SuperPartition) -> SuperPartition | None:
    """Put a circle at the end of the first row; None if it already has one."""
    rows = sp.rows()
    if not rows:
        return from_rows([(0, True)])
    if rows[0][1]:
        return None
    return from_rows([(rows[0][0], True)] + rows[1:])


# -- oracle ------------------------------------------------------------------

GENERATORS = {
    "e": elementary, "h": homogeneous, "theta": theta,
    "et": elementary_tilde, "ht": homogeneous_tilde,
}


def oracle_product(generator: str, r: int, sp: SuperPartition,
                   kind: SchurType = SchurType.I) -> dict[SuperPartition, Fraction]:
    """Expand generator_r * s^kind_Lambda in the same family by brute force."""
    g = GENERATORS[generator](r)
    return expand_in_schur(g * schur(kind, sp), kind)


RULES = {
    "eI": (pieri_e_I, "e", SchurType.I),
    "thetaI": (pieri_theta_I, "theta", SchurType.I),
    "hIstar": (pieri_h_Istar, "h", SchurType.Istar),
    "eIstar": (pieri_e_Istar, "e", SchurType.Istar),
}


# generator degree shift of each rule, as (total, fermionic)
def _shift(rule: str, r: int) -> tuple[int, int]:
    return (r - 1, 1) if rule == "thetaI" else (r, 0)


def apply_rule(rule: str, r: int, sp: SuperPartition) -> SignedExpansion:
    return RULES[rule][0](r, sp)


def inverse_rule(rule: str, r: int, sp: SuperPartition) -> SignedExpansion:
    """Adjoint action read off the rule by transposition within one block.

    ``eI`` gives e_r^perp on s*, ``thetaI`` gives theta_r^perp on s*, and
    ``hIstar``/``eIstar`` give h_r^perp/e_r^perp on s, since each family is
    dual to the other.
    """
    dn, dm = _shift(rule, r)
    n, m = sp.total_degree - dn, sp.fermionic_degree - dm
    if n < 0 or m < 0:
        return {}
    out = {}
    for src in enumerate_superpartitions(n, m):
        c = apply_rule(rule, r, src).get(sp)
        if c:
            out[src] = c
    return _sorted(out)


def check_rule(rule: str, r: int, sp: SuperPartition) -> bool:
    func, gen, kind = RULES[rule]
    return func(r, sp) == {k: int(v) for k, v in oracle_product(gen, r, sp, kind).items()}


def _sorted(expansion: SignedExpansion) -> SignedExpansion:
    return dict(sorted(expansion.items(), key=lambda kv: kv[0].sort_key()))
