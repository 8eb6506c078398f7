"""The ten acceptance criteria, each exact (tolerance zero).

Every test prints one PASS/FAIL line, also repeated in the terminal summary.
Criterion 7 states the unsigned omega relations; they are implemented as
stated and fail, since they only hold with a (-1)^binom(m,2) sign.  The
signed forms are checked separately in test_signed_omega_relations.
"""
import time

from conftest import ACCEPTANCE_LINES
from superschur import verify


def criterion(number: int, title: str, checks, budget: float):
    start = time.perf_counter()
    report = verify.run_checks(f"criterion {number}", checks)
    elapsed = time.perf_counter() - start
    failure = report.first_failure()
    verdict = "PASS" if failure is None else "FAIL"
    line = f"{verdict} criterion {number}: {title} ({elapsed:.1f}s, budget {budget:.0f}s)"
    if failure is not None:
        line += f" -- {failure.name}: {failure.counterexample}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert failure is None, line


def test_criterion_01_worked_examples():
    criterion(1, "worked examples", verify.worked_examples(), 6)


def test_criterion_02_one_row_column():
    criterion(2, "one-row/one-column table, r <= 6", verify.one_row_column(6), 10)


def test_criterion_03_orthogonality():
    criterion(3, "orthogonality, |L| <= 6, m <= 3", verify.orthogonality(6, 3), 60)


def test_criterion_04_creation():
    criterion(4, "creation property, |L| <= 5, m <= 3", verify.creation(5, 3), 120)


def test_criterion_05_pieri():
    criterion(5, "Pieri rules vs oracle, |L| <= 5, m <= 2, r <= 4", verify.pieri(5, 2, 4), 120)


def test_criterion_06_classical():
    criterion(6, "m = 0 sector vs Jacobi-Trudi, degree <= 8", verify.classical(8), 30)


def test_criterion_07_dualities():
    criterion(7, "duality suite, |L| <= 5", verify.dualities(5, 3), 60)


def test_criterion_08_exchange_relations():
    criterion(8, "derivative identities and exchange relations, (5,2), indices <= 6",
              verify.derivatives_and_exchange(6, (5, 2)), 60)


def test_criterion_09_negative_modes():
    criterion(9, "negative modes strip to (-1)^|L|, |L| <= 5, m <= 2", verify.negative_modes(5, 2), 60)


def test_criterion_10_recurrence():
    criterion(10, "e/h recurrence through the rules, r <= 3, |L| <= 4", verify.recurrence(3, 4), 30)


def test_signed_omega_relations():
    """The relations of criterion 7 with the sign forced by phi = omega rho."""
    checks = [c for c in verify.dualities(5, 3) if c[0] not in verify.UNSIGNED_OMEGA_CHECKS]
    report = verify.run_checks("signed", checks)
    assert report.passed, report.first_failure()


def test_unsigned_omega_relations_fail_exactly_by_the_sign():
    """Where the unsigned relation fails, it fails by an overall -1."""
    from math import comb

    from superschur.bases import SchurType, schur
    from superschur.operators import omega
    from superschur.superpartitions import superpartitions_up_to

    for lam in superpartitions_up_to(5, 4):
        lhs, rhs = schur(SchurType.Istar, lam), omega(schur(SchurType.II, lam.conjugate()))
        assert lhs == (-rhs if comb(lam.fermionic_degree, 2) % 2 else rhs)
