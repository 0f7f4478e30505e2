"""End-to-end verification gate: one test per acceptance criterion.

Each test runs the corresponding full-size suite from :mod:`boxlim.suites`
(fixed seeds, pinned tolerances, wall-clock budgets enforced inside the
checks) and records a single PASS/FAIL line, echoed in the terminal summary.
"""

from conftest import ACCEPTANCE_LINES

from boxlim.suites import (
    check_complex_product,
    check_convergence,
    check_exact_cancellation,
    check_lines,
    check_maxplus_bridge,
    check_pythagoras,
    check_scalar_laws,
    check_square_trig,
    check_ultrametric,
    check_worked_values,
)


def _record(result):
    line = result.line()
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert result.passed, result.detail


def test_criterion_01_worked_values_are_exact_and_fast():
    _record(check_worked_values())


def test_criterion_02_scalar_laws_hold_in_bulk():
    _record(check_scalar_laws())


def test_criterion_03_deformations_converge_within_tolerance():
    _record(check_convergence())


def test_criterion_04_cancellation_is_exact_at_every_level():
    _record(check_exact_cancellation())


def test_criterion_05_the_distance_is_an_ultrametric_with_worked_balls():
    _record(check_ultrametric())


def test_criterion_06_pythagoras_holds_for_limit_right_angles():
    _record(check_pythagoras())


def test_criterion_07_square_trigonometry_is_exact_and_periodic():
    _record(check_square_trig())


def test_criterion_08_complex_products_obey_the_laws():
    _record(check_complex_product())


def test_criterion_09_lines_certify_membership_and_parallels():
    _record(check_lines())


def test_criterion_10_maxplus_mirror_and_float_bridge():
    _record(check_maxplus_bridge())
