import json

import numpy as np
import pytest

import histocond.vandermonde
import histocond.verify as verify_mod
from histocond.bases import integral_basis_columns


def test_report_structure(verify_report):
    names = {g.name for g in verify_report.groups}
    assert len(names) == len(verify_report.groups)  # unique group names
    assert verify_report.passed == all(g.passed for g in verify_report.groups)
    assert verify_report.runtime_s > 0.0


def test_report_covers_every_module_area(verify_report):
    prefixes = {g.name.split("/")[0] for g in verify_report.groups}
    assert prefixes >= {"segments", "bases", "vandermonde", "conditioning", "histofit", "sweep"}


def test_informational_measurements_present(verify_report):
    info = verify_report.informational
    for key in (
        "gram_last_diagonal_over_closed_form",
        "kappa2_svd_vs_simplified_formula",
        "det_numeric_over_closed_form_c2",
        "inverse_entry_formula_over_numeric",
        "kappa2_small_arc_limit_vs_formula",
        "frobenius_inverse_norm_over_d",
        "fekete_optimum_attains_left_boundary",
    ):
        assert key in info, key


def test_json_round_trip_is_strict_json(verify_report):
    data = json.loads(verify_report.to_json())
    assert data["passed"] == verify_report.passed
    assert len(data["groups"]) == len(verify_report.groups)


def test_human_summary_one_line_per_group(verify_report):
    lines = verify_report.human_summary().splitlines()
    status_lines = [ln for ln in lines if ln.startswith(("[PASS]", "[FAIL]"))]
    assert len(status_lines) == len(verify_report.groups)


def test_injected_sign_bug_trips_gram_orthogonality(monkeypatch):
    # Mutation check: corrupt one column of the assembled integrals and the
    # orthogonality group must fail.
    def corrupted(kind, jmax, alpha, beta):
        out = integral_basis_columns(kind, jmax, alpha, beta)
        if jmax >= 3:
            out[:, 2] = -out[:, 2]
        return out

    monkeypatch.setattr(histocond.vandermonde, "integral_basis_columns", corrupted)
    assert not verify_mod._g_gram_orthogonality().passed


def test_clean_gram_orthogonality_passes():
    assert verify_mod._g_gram_orthogonality().passed
