import pytest

from superschur.bases import SchurType
from superschur.pieri import (RULES, add_first_circle, apply_rule, check_rule, decorate,
                              horizontal_strips, inverse_rule, oracle_product, pieri_e_I,
                              pieri_e_Istar, pieri_h_Istar, pieri_theta_I, strip_first_circle,
                              vertical_strips)
from superschur.operators import e_perp
from superschur.bases import expand_in_schur, schur
from superschur.superpartitions import parse, superpartitions_up_to


def expansion(*texts, sign=None):
    out = {parse(t): 1 for t in texts}
    if sign:
        out.update({parse(t): s for t, s in sign.items()})
    return out


def test_strips():
    assert set(horizontal_strips((2, 1), 1)) == {(3, 1), (2, 2), (2, 1, 1)}
    assert set(vertical_strips((2, 1), 2)) == {(3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1)}
    assert list(vertical_strips((), 0)) == [()]


def test_theta_rule_examples():
    assert pieri_theta_I(4, parse("0;3")) == expansion("6,0;", "5,1;", "4,2;", "5,0;1", "4,0;2", "3,0;3")
    assert pieri_theta_I(5, parse("2;")) == expansion("4,2;")
    assert pieri_theta_I(5, parse("0;2")) == expansion("6,0;", "5,1;", "5,0;1", "4,0;2")
    assert pieri_theta_I(1, parse(";3")) == expansion("3;", "0;3")


def test_theta_rule_signs():
    # the new circle below an existing one picks up a minus sign
    result = pieri_theta_I(1, parse("2;"))
    assert result == {parse("2,0;"): -1}


def test_e_rule_examples():
    assert pieri_e_I(1, parse("0;")) == expansion("1;", "0;1")
    assert pieri_e_I(2, parse(";1")) == expansion(";2,1", ";1,1,1")
    assert pieri_e_I(2, parse("0;1")) == expansion("0;1,1,1", "0;2,1", "1;2")
    assert pieri_e_I(0, parse("1;2")) == expansion("1;2")


def test_istar_rule_examples():
    assert pieri_h_Istar(3, parse("1;3")) == expansion("1;6", "0;5,2", "1;5,1", "0;4,3", "1;4,2", "1;3,3")
    assert pieri_h_Istar(4, parse(";")) == expansion(";4")
    assert pieri_h_Istar(1, parse("0;")) == expansion("0;1")
    assert pieri_e_Istar(2, parse("2;1")) == expansion("2;1,1,1", "2;2,1", "1;3,1", "0;3,2")
    assert pieri_e_Istar(3, parse(";")) == expansion(";1,1,1")
    assert pieri_e_Istar(1, parse("0;")) == expansion("0;1")


@pytest.mark.parametrize("rule", list(RULES))
def test_rules_match_oracle_on_small_grid(rule):
    for lam in superpartitions_up_to(3, 2):
        for r in range(1 if rule == "thetaI" else 0, 4):
            assert check_rule(rule, r, lam), (rule, r, lam)


def test_bookkeeping_of_fermionic_degree():
    for lam in superpartitions_up_to(4, 2):
        for r in range(1, 4):
            assert all(k.fermionic_degree == lam.fermionic_degree + 1 for k in pieri_theta_I(r, lam))
            for rule in ("eI", "hIstar", "eIstar"):
                assert all(k.fermionic_degree == lam.fermionic_degree for k in apply_rule(rule, r, lam))
                assert set(apply_rule(rule, r, lam).values()) <= {1}


def test_oracle_trivial_cases():
    for lam in superpartitions_up_to(3, 2):
        assert oracle_product("e", 0, lam, SchurType.I) == {lam: 1}


def test_inverse_rule_is_the_adjoint():
    for lam in superpartitions_up_to(4, 2):
        for r in range(3):
            direct = expand_in_schur(e_perp(r)(schur(SchurType.Istar, lam)), SchurType.Istar)
            assert inverse_rule("eI", r, lam) == direct
            direct = expand_in_schur(e_perp(r)(schur(SchurType.I, lam)), SchurType.I)
            assert inverse_rule("eIstar", r, lam) == direct


def test_first_circle():
    assert strip_first_circle(parse("3;")) == parse(";3")
    assert strip_first_circle(parse(";3,1")) is None
    assert strip_first_circle(parse("3,0;3")) == parse("0;3,3")
    assert strip_first_circle(parse("0;")) == parse(";")
    for lam in superpartitions_up_to(5, 2):
        grown = add_first_circle(lam)
        if grown is not None:
            assert strip_first_circle(grown) == lam


def test_first_circle_matches_the_derivation():
    from superschur.operators import partial_e_tilde
    for lam in superpartitions_up_to(5, 2):
        got = expand_in_schur(partial_e_tilde(0)(schur(SchurType.I, lam)), SchurType.I)
        target = strip_first_circle(lam)
        assert got == ({} if target is None else {target: 1})


def test_decorated_diagram():
    d = decorate(parse("2;1"), parse("0;3,2"))
    assert d.added_cells == {(0, 2), (1, 1)}
    assert d.circle_rows == (2,)
    assert d.moved_flags == {2}
    assert d.render() == "[ ][ ][+]\n[ ][+]\n(!)"
    removed = decorate(parse(";2,2"), parse(";2,1"))
    assert removed.removed_cells == {(1, 1)}
    assert removed.render() == "[ ][ ]\n[ ][x]"
