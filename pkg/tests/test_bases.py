from fractions import Fraction

import pytest

from superschur.bases import (IncompleteBasis, SchurTable, SchurType, e_basis, elementary,
                              elementary_tilde, expand_in_schur, h_basis, homogeneous,
                              homogeneous_tilde, operator_string, power_sum_basis, reconstruct,
                              render_expansion, schur)
from superschur.superalgebra import SuperPolynomial, scalar_product, theta, x
from superschur.superpartitions import enumerate_superpartitions, parse

I, Istar, II, IIstar = SchurType


def test_generators_low_degree():
    assert homogeneous(2) == x(2) + Fraction(1, 2) * x(1) ** 2
    assert elementary(2) == -x(2) + Fraction(1, 2) * x(1) ** 2
    assert homogeneous_tilde(0) == theta(1)
    assert homogeneous_tilde(1) == theta(1) * x(1) + theta(2)
    assert elementary_tilde(1) == theta(1) * x(1) - theta(2)


def test_generating_series_relation():
    # sum_{k} (-1)^k e_k h_{n-k} = 0 for n > 0
    for n in range(1, 7):
        total = sum(((-1) ** k * elementary(k) * homogeneous(n - k) for k in range(n + 1)),
                    SuperPolynomial())
        assert not total


def test_multiplicative_bases():
    lam = parse("1;2")
    assert power_sum_basis(lam) == theta(2) * x(2)
    assert h_basis(lam) == homogeneous_tilde(1) * homogeneous(2)
    assert e_basis(lam) == elementary_tilde(1) * elementary(2)


def test_schur_type_parsing():
    assert SchurType.parse("I*") is Istar
    assert SchurType.parse("iistar") is IIstar
    assert Istar.dual is I and II.dual is IIstar
    with pytest.raises(ValueError):
        SchurType.parse("III")


def test_operator_string():
    assert operator_string(I, parse("4,1;3,2,2")) == "B4^1 B3^0 B2^0 B2^0 B1^1"
    assert operator_string(IIstar, parse("0;")) == "Cbar0^1"


def test_worked_schur_functions():
    assert schur(I, "0;3") == (-theta(4) + SuperPolynomial.monomial([1], [3])
                               + SuperPolynomial.monomial([1], [2, 1])
                               + SuperPolynomial.monomial([1], [1, 1, 1], Fraction(1, 6)))
    assert schur(Istar, "2;1") == homogeneous_tilde(2) * homogeneous(1) - homogeneous_tilde(0) * homogeneous(3)
    assert schur(IIstar, "0;1,1") == theta(3)
    assert schur(I, ";") == SuperPolynomial.constant(1)


@pytest.mark.parametrize("kind", [I, II])
def test_duality_small_blocks(kind):
    for n in range(4):
        for m in range(3):
            block = enumerate_superpartitions(n, m)
            for a in block:
                for b in block:
                    assert scalar_product(schur(kind, a), schur(kind.dual, b)) == (a == b)


def test_expand_and_reconstruct():
    f = theta(4) * schur(I, "0;3")
    coeffs = expand_in_schur(f, I, check=True)
    assert set(coeffs.values()) == {1}
    assert len(coeffs) == 6
    assert reconstruct(coeffs, I) == f


def test_render_expansion():
    assert render_expansion({parse("3,0;3"): Fraction(1)}) == "(3,0;3): 1"
    assert render_expansion({}) == "0"


def test_table_bounds():
    table = SchurTable(max_total=3, max_fermionic=1)
    assert table.get(I, parse("1;1")) == schur(I, "1;1")
    with pytest.raises(IncompleteBasis):
        table.get(I, parse("1,0;"))
    with pytest.raises(IncompleteBasis):
        table.block(Istar, (4, 0))


def test_gram_matrix_is_identity():
    table = SchurTable()
    g = table.gram_matrix(II, (3, 1))
    assert all(g[i][j] == (i == j) for i in range(len(g)) for j in range(len(g)))
