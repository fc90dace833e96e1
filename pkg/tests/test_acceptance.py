"""Acceptance gate: the twelve named verification suites, one test per
criterion.  Each test runs its suite end to end and prints a single
pass/fail line; every check inside a suite compares exact integers or
exact invariant-factor strings, never approximations."""

from simpcat.suites import run_suite


def _run(number, name):
    rep = run_suite(name)
    verdict = "PASS" if rep.overall else "FAIL"
    print(f"criterion {number:02d} ({name}): {verdict}")
    if not rep.overall:
        detail = "\n".join(rep.summary_lines())
        raise AssertionError(f"suite {name} failed:\n{detail}")


def test_criterion_01_identities():
    _run(1, "identities")


def test_criterion_02_c_sigma_contractibility():
    _run(2, "c-sigma-contractibility")


def test_criterion_03_acyclic_cofibrations():
    _run(3, "acyclic-cofibrations")


def test_criterion_04_niso_pushout():
    _run(4, "niso-pushout")


def test_criterion_05_diag_wbar():
    _run(5, "diag-wbar")


def test_criterion_06_unit():
    _run(6, "unit")


def test_criterion_07_effective_mono():
    _run(7, "effective-mono")


def test_criterion_08_suspension_ladder():
    _run(8, "suspension-ladder")


def test_criterion_09_mapspace():
    _run(9, "mapspace")


def test_criterion_10_k_theory():
    _run(10, "k-theory")


def test_criterion_11_omega_probe():
    _run(11, "omega-probe")


def test_criterion_12_directed_colimit():
    _run(12, "directed-colimit")
