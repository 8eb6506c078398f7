"""The supercommutative ring Q[x1, x2, ...] (x) Lambda[theta1, theta2, ...].

Elements are sparse maps from canonical monomials to exact rationals.  A
monomial is stored as ``(thetas, xs)`` with ``thetas`` strictly increasing and
``xs`` weakly decreasing.  ``x_k`` has degree ``k`` and ``theta_k`` degree
``k - 1``; the fermionic degree counts theta factors.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from collections import Counter
from typing import Callable, Iterable, Iterator, Mapping

from .superpartitions import aut_order, enumerate_superpartitions

Monomial = tuple[tuple[int, ...], tuple[int, ...]]
ONE: Monomial = ((), ())


class OddInputRejected(ValueError):
    pass


class SingularGram(ArithmeticError):
    pass


# -- monomials ---------------------------------------------------------------

def monomial_bidegree(mono: Monomial) -> tuple[int, int]:
    thetas, xs = mono
    return (sum(k - 1 for k in thetas) + sum(xs), len(thetas))


def merge_thetas(s: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sign and canonical order of theta_S * theta_T; sign 0 if they overlap."""
    if not s:
        return 1, t
    if not t:
        return 1, s
    if set(s) & set(t):
        return 0, ()
    inversions = sum(1 for a in s for b in t if a > b)
    return (-1 if inversions % 2 else 1), tuple(sorted(s + t))


def merge_xs(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def monomial_weight(mono: Monomial) -> Fraction:
    """<m, m> for a canonical monomial."""
    thetas, xs = mono
    sign = -1 if comb(len(thetas), 2) % 2 else 1
    return sign * Fraction(aut_order(xs), prod(xs))


def monomial_sort_key(mono: Monomial):
    # ascending bidegree, then descending diagram order inside a block
    thetas, xs = mono
    circ = sorted(list(thetas) + list(xs), reverse=True)
    star = sorted([k - 1 for k in thetas if k > 1] + list(xs), reverse=True)
    key = tuple(-v for v in circ) + (1,), tuple(-v for v in star) + (1,)
    return monomial_bidegree(mono), key


@lru_cache(maxsize=None)
def basis_monomials(total: int, fermionic: int) -> tuple[Monomial, ...]:
    """Canonical monomials of one bidegree, in canonical order."""
    out = [(tuple(sorted(a + 1 for a in sp.antisymmetric_parts)), sp.symmetric_parts)
           for sp in enumerate_superpartitions(total, fermionic)]
    return tuple(sorted(out, key=monomial_sort_key))


# -- polynomials -------------------------------------------------------------

def _fraction(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class SuperPolynomial:
    """Immutable finite sum of canonical monomials with rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = _fraction(c)
                if c:
                    clean[mono] = c
        self.terms: dict[Monomial, Fraction] = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "SuperPolynomial":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c=1) -> "SuperPolynomial":
        return cls({ONE: c})

    @classmethod
    def monomial(cls, thetas: Iterable[int] = (), xs: Iterable[int] = (), coeff=1) -> "SuperPolynomial":
        """Product theta_{t1} theta_{t2} ... x_{k1} x_{k2} ... in the given factor order."""
        thetas = tuple(thetas)
        sign, canon = 1, ()
        for t in thetas:
            s, canon = merge_thetas(canon, (t,))
            sign *= s
            if not sign:
                return cls()
        return cls({(canon, tuple(sorted(xs, reverse=True))): sign * _fraction(coeff)})

    # -- container protocol
    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: monomial_sort_key(kv[0])))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperPolynomial.constant(other)
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    # -- arithmetic
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperPolynomial.constant(other)
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return SuperPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SuperPolynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _fraction(other)
            if not other:
                return SuperPolynomial()
            return SuperPolynomial._raw({m: c * other for m, c in self.terms.items()})
        if isinstance(other, SuperPolynomial):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        return self * (Fraction(1) / _fraction(other))

    def __pow__(self, n: int):
        out = SuperPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    # -- grading
    def bidegrees(self) -> set[tuple[int, int]]:
        return {monomial_bidegree(m) for m in self.terms}

    def component(self, bidegree: tuple[int, int]) -> "SuperPolynomial":
        return SuperPolynomial._raw({m: c for m, c in self.terms.items()
                                     if monomial_bidegree(m) == bidegree})

    def components(self) -> dict[tuple[int, int], "SuperPolynomial"]:
        out: dict[tuple[int, int], dict] = {}
        for m, c in self.terms.items():
            out.setdefault(monomial_bidegree(m), {})[m] = c
        return {k: SuperPolynomial._raw(v) for k, v in sorted(out.items())}

    def is_homogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    def has_theta(self) -> bool:
        return any(m[0] for m in self.terms)

    def max_x_degree(self) -> int:
        return max((sum(m[1]) for m in self.terms), default=0)

    # -- I/O
    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"SuperPolynomial({render(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "theta": list(m[0]), "x": list(m[1])} for m, c in self]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "SuperPolynomial":
        out = cls()
        for term in data:
            out = out + cls.monomial(term.get("theta", ()), term.get("x", ()),
                                     Fraction(term["coeff"]))
        return out


def zero() -> SuperPolynomial:
    return SuperPolynomial()


def one() -> SuperPolynomial:
    return SuperPolynomial.constant(1)


def x(k: int) -> SuperPolynomial:
    return SuperPolynomial({((), (k,)): 1})


def theta(k: int) -> SuperPolynomial:
    return SuperPolynomial({((k,), ()): 1})


def multiply(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    out: dict[Monomial, Fraction] = {}
    for (ft, fx), fc in f.terms.items():
        for (gt, gx), gc in g.terms.items():
            sign, th = merge_thetas(ft, gt)
            if not sign:
                continue
            mono = (th, merge_xs(fx, gx))
            v = out.get(mono, 0) + sign * fc * gc
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return SuperPolynomial._raw(out)


def linear_combination(pairs: Iterable[tuple[object, SuperPolynomial]]) -> SuperPolynomial:
    out: dict[Monomial, Fraction] = {}
    for c, poly in pairs:
        c = _fraction(c)
        if not c:
            continue
        for mono, v in poly.terms.items():
            w = out.get(mono, 0) + c * v
            if w:
                out[mono] = w
            else:
                out.pop(mono, None)
    return SuperPolynomial._raw(out)


def scalar_product(f: SuperPolynomial, g: SuperPolynomial) -> Fraction:
    """Power-sum pairing: monomials are orthogonal with signed weight."""
    if len(f.terms) > len(g.terms):
        f, g = g, f
    total = Fraction(0)
    for mono, c in f.terms.items():
        d = g.terms.get(mono)
        if d:
            total += c * d * monomial_weight(mono)
    return total


# -- derivations -------------------------------------------------------------

def partial_x(k: int, f: SuperPolynomial) -> SuperPolynomial:
    out: dict[Monomial, Fraction] = {}
    for (th, xs), c in f.terms.items():
        n = xs.count(k)
        if not n:
            continue
        i = xs.index(k)
        mono = (th, xs[:i] + xs[i + 1:])
        out[mono] = out.get(mono, 0) + n * c
    return SuperPolynomial(out)


def partial_theta(k: int, f: SuperPolynomial) -> SuperPolynomial:
    """Left derivative: passing over a theta factor flips the sign."""
    out: dict[Monomial, Fraction] = {}
    for (th, xs), c in f.terms.items():
        if k not in th:
            continue
        p = th.index(k)
        mono = (th[:p] + th[p + 1:], xs)
        out[mono] = out.get(mono, 0) + (-c if p % 2 else c)
    return SuperPolynomial(out)


def _x_adjoint_on_monomial(mu: tuple[int, ...], mono: Monomial) -> tuple[Monomial, Fraction] | None:
    """Apply prod_k ((1/k) d/dx_k)^{a_k} (exponents from mu) to a monomial."""
    th, xs = mono
    need = Counter(mu)
    have = Counter(xs)
    coeff = Fraction(1)
    for k, a in need.items():
        b = have.get(k, 0)
        if b < a:
            return None
        coeff *= Fraction(factorial(b) // factorial(b - a), k ** a)
        have[k] = b - a
    rest = tuple(sorted(have.elements(), reverse=True))
    return (th, rest), coeff


def apply_even_adjoint(f_even: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    """Apply f(d_{x1}, d_{x2}/2, d_{x3}/3, ...) to g, for f free of thetas."""
    if f_even.has_theta():
        raise OddInputRejected("adjoint substitution only handles theta-free elements")
    out: dict[Monomial, Fraction] = {}
    for (_, mu), c in f_even.terms.items():
        for mono, d in g.terms.items():
            hit = _x_adjoint_on_monomial(mu, mono)
            if hit is None:
                continue
            target, w = hit
            v = out.get(target, 0) + c * d * w
            if v:
                out[target] = v
            else:
                out.pop(target, None)
    return SuperPolynomial._raw(out)


def apply_substitution_adjoint(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    """Apply f(d_{x1}, d_{x2}/2, ...; d_{theta1}, d_{theta2}, ...) to g.

    Theta derivatives keep the order of the theta factors in each monomial of
    f, so the rightmost one acts first.  On theta-free f this agrees with
    :func:`apply_even_adjoint`; on odd elements it differs from the Gram
    adjoint by a parity sign.
    """
    out = SuperPolynomial()
    for (th, mu), c in f.terms.items():
        part = apply_even_adjoint(SuperPolynomial._raw({((), mu): Fraction(1)}), g)
        for k in reversed(th):
            part = partial_theta(k, part)
        out = out + part * c
    return out


def parity_sign(f: SuperPolynomial, shift: int = 0) -> SuperPolynomial:
    """Multiply each term by (-1)^(fermionic degree + shift)."""
    return SuperPolynomial._raw({m: (-c if (len(m[0]) + shift) % 2 else c)
                                 for m, c in f.terms.items()})


# -- linear operators --------------------------------------------------------

class LinearOperator:
    """Homogeneous linear map on superpolynomials, defined monomial by monomial.

    ``degree_shift`` is the change of (total, fermionic) degree; results on a
    monomial are memoised, so ``on_monomial`` must be a pure function.
    """

    def __init__(self, on_monomial: Callable[[Monomial], SuperPolynomial],
                 degree_shift: tuple[int, int] = (0, 0), name: str = "?",
                 parity: int | None = None):
        self._on_monomial = on_monomial
        self.degree_shift = tuple(degree_shift)
        self.parity = degree_shift[1] % 2 if parity is None else parity
        self.name = name
        self._cache: dict[Monomial, SuperPolynomial] = {}

    def on_monomial(self, mono: Monomial) -> SuperPolynomial:
        hit = self._cache.get(mono)
        if hit is None:
            hit = self._on_monomial(mono)
            self._cache[mono] = hit
        return hit

    def __call__(self, f: SuperPolynomial) -> SuperPolynomial:
        if isinstance(f, (int, Fraction)):
            f = SuperPolynomial.constant(f)
        return linear_combination((c, self.on_monomial(m)) for m, c in f.terms.items())

    def __repr__(self):
        return f"LinearOperator({self.name!r}, shift={self.degree_shift})"

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        shift = (self.degree_shift[0] + other.degree_shift[0],
                 self.degree_shift[1] + other.degree_shift[1])
        return LinearOperator(lambda m: self(other.on_monomial(m)), shift,
                              f"{self.name} {other.name}", (self.parity + other.parity) % 2)

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(lambda m: self.on_monomial(m) + other.on_monomial(m),
                              self.degree_shift, f"({self.name} + {other.name})", self.parity)

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(lambda m: self.on_monomial(m) - other.on_monomial(m),
                              self.degree_shift, f"({self.name} - {other.name})", self.parity)

    def __neg__(self):
        return LinearOperator(lambda m: -self.on_monomial(m), self.degree_shift,
                              f"-{self.name}", self.parity)

    def __rmul__(self, c):
        c = _fraction(c)
        return LinearOperator(lambda m: self.on_monomial(m) * c, self.degree_shift,
                              f"{c}*{self.name}", self.parity)

    def block_matrix(self, source: tuple[int, int]) -> dict[Monomial, dict[Monomial, Fraction]]:
        """Column map: source basis monomial -> coefficients of its image."""
        return {s: dict(self.on_monomial(s).terms) for s in basis_monomials(*source)}


def identity_operator() -> LinearOperator:
    return LinearOperator(lambda m: SuperPolynomial._raw({m: Fraction(1)}), (0, 0), "id")


def multiplication_operator(g: SuperPolynomial, name: str | None = None) -> LinearOperator:
    """Left multiplication by a homogeneous element."""
    degs = g.bidegrees()
    if len(degs) > 1:
        raise ValueError("multiplication operators need a homogeneous factor")
    shift = next(iter(degs)) if degs else (0, 0)
    return LinearOperator(lambda m: multiply(g, SuperPolynomial._raw({m: Fraction(1)})),
                          shift, name or f"[{render(g)}]")


def even_adjoint_operator(f_even: SuperPolynomial, name: str | None = None) -> LinearOperator:
    degs = f_even.bidegrees()
    if len(degs) > 1:
        raise ValueError("adjoint operators need a homogeneous argument")
    d = next(iter(degs)) if degs else (0, 0)
    return LinearOperator(lambda m: apply_even_adjoint(f_even, SuperPolynomial._raw({m: Fraction(1)})),
                          (-d[0], -d[1]), name or f"[{render(f_even)}]^perp")


def substitution_adjoint_operator(f: SuperPolynomial, name: str | None = None) -> LinearOperator:
    """Operator form of :func:`apply_substitution_adjoint` for homogeneous f."""
    degs = f.bidegrees()
    if len(degs) > 1:
        raise ValueError("adjoint operators need a homogeneous argument")
    d = next(iter(degs)) if degs else (0, 0)
    return LinearOperator(lambda m: apply_substitution_adjoint(f, SuperPolynomial._raw({m: Fraction(1)})),
                          (-d[0], -d[1]), name or f"[{render(f)}]^sub")


def gram_adjoint(op: LinearOperator, name: str | None = None) -> LinearOperator:
    """Adjoint for the power-sum scalar product, built block by block.

    With diagonal monomial Gram weights w, the adjoint sends a target
    monomial t to sum_s M[t, s] w(t) / w(s) s, where M[t, s] is the
    coefficient of t in op(s).
    """
    dn, dm = op.degree_shift
    blocks: dict[tuple[int, int], dict[Monomial, dict[Monomial, Fraction]]] = {}

    def transposed(target_bidegree):
        if target_bidegree not in blocks:
            src = (target_bidegree[0] - dn, target_bidegree[1] - dm)
            table: dict[Monomial, dict[Monomial, Fraction]] = {}
            if src[0] >= 0 and src[1] >= 0:
                for s in basis_monomials(*src):
                    ws = monomial_weight(s)
                    if not ws:
                        raise SingularGram(f"zero Gram weight at {s}")
                    for t, c in op.on_monomial(s).terms.items():
                        table.setdefault(t, {})[s] = c * monomial_weight(t) / ws
            blocks[target_bidegree] = table
        return blocks[target_bidegree]

    def on_monomial(t: Monomial) -> SuperPolynomial:
        return SuperPolynomial._raw(dict(transposed(monomial_bidegree(t)).get(t, {})))

    return LinearOperator(on_monomial, (-dn, -dm), name or f"({op.name})^perp", op.parity)


# -- rendering and parsing ---------------------------------------------------

def render_monomial(mono: Monomial) -> str:
    th, xs = mono
    parts = [f"t{k}" for k in th]
    for k, n in sorted(Counter(xs).items()):
        parts.append(f"x{k}" if n == 1 else f"x{k}^{n}")
    return "*".join(parts)


def render(f: SuperPolynomial) -> str:
    """Text form ``coeff monomial | coeff monomial ...``; ``0`` for zero."""
    if not f:
        return "0"
    out = []
    for mono, c in f:
        body = render_monomial(mono)
        out.append(f"{c} {body}" if body else f"{c}")
    return " | ".join(out)


_FACTOR = re.compile(r"^(t|x)(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str) -> SuperPolynomial:
    """Inverse of :func:`render`; theta factors may come in any order."""
    text = text.strip()
    if text in ("", "0"):
        return SuperPolynomial()
    out = SuperPolynomial()
    for chunk in text.split("|"):
        pieces = chunk.split()
        if not pieces:
            raise ValueError(f"empty term in {text!r}")
        coeff = Fraction(pieces[0])
        thetas: list[int] = []
        xs: list[int] = []
        for body in pieces[1:]:
            for factor in body.split("*"):
                m = _FACTOR.match(factor)
                if not m:
                    raise ValueError(f"cannot parse factor {factor!r}")
                k, n = int(m.group(2)), int(m.group(3) or 1)
                if m.group(1) == "t":
                    thetas.extend([k] * n)
                else:
                    xs.extend([k] * n)
        out = out + SuperPolynomial.monomial(thetas, xs, coeff)
    return out
