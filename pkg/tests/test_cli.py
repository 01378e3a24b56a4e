"""End-to-end runs of the installed command line interface."""

from __future__ import annotations

import json
import os
import subprocess
import sys

from ihshodge.diamond import HodgeDiamond
from ihshodge.goettsche import hilbert_scheme_diamond, surface_diamond
from ihshodge.pipeline import STAGE_ORDER, run_full_pipeline


def run_cli(*argv: str, env_extra: dict[str, str] | None = None):
    env = os.environ.copy()
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "ihshodge", *argv],
                          capture_output=True, text=True, env=env)


# ---------------------------------------------------------------------------
# og6


def test_og6_json_payload():
    proc = run_cli("og6", "--format", "json")
    assert proc.returncode == 0, proc.stderr
    payload = json.loads(proc.stdout)
    assert set(payload) == {"diamond", "betti", "chern"}
    assert [3, 3, 1144] in payload["diamond"]["entries"]
    assert payload["betti"] == {
        "n": 6, "b": [1, 0, 8, 0, 199, 0, 1504, 0, 199, 0, 8, 0, 1]}
    assert payload["chern"]["c2_cubed"] == 30720
    assert payload["chern"]["c6"] == 1920
    parsed = HodgeDiamond.from_json_dict(payload["diamond"])
    assert parsed == run_full_pipeline().diamond


def test_og6_json_trace():
    proc = run_cli("og6", "--format", "json", "--trace")
    assert proc.returncode == 0, proc.stderr
    payload = json.loads(proc.stdout)
    assert [entry["lemma"] for entry in payload["trace"]] == list(STAGE_ORDER)


def test_og6_text_output():
    proc = run_cli("og6")
    assert proc.returncode == 0, proc.stderr
    assert "OG6 Hodge diamond" in proc.stdout
    assert "Betti numbers: 1 0 8 0 199 0 1504 0 199 0 8 0 1" in proc.stdout
    assert "Euler characteristic: 1920" in proc.stdout
    assert "c2^3 = 30720" in proc.stdout
    assert "1144" in proc.stdout
    assert "Derivation trace:" not in proc.stdout


def test_og6_text_trace():
    proc = run_cli("og6", "--trace")
    assert proc.returncode == 0, proc.stderr
    assert "Derivation trace:" in proc.stdout
    for tag in STAGE_ORDER:
        assert tag in proc.stdout


def test_og6_latex_output():
    proc = run_cli("og6", "--format", "latex", "--trace")
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.startswith("\\begin{array}")
    assert "1144" in proc.stdout
    assert "% Betti numbers:" in proc.stdout
    assert "% chi^0 = 4" in proc.stdout
    assert "% Derivation trace:" in proc.stdout


def test_og6_rejects_impossible_euler_characteristic():
    proc = run_cli("og6", "--b2", "8", "--chi", "1921")
    assert proc.returncode == 2
    assert "error:" in proc.stderr
    assert proc.stdout == ""


def test_og6_rejects_bad_b2():
    proc = run_cli("og6", "--b2", "2")
    assert proc.returncode == 2
    assert "error:" in proc.stderr


def test_og6_detects_inconsistent_pair():
    # chi = 1928 solves the Betti system with b4 = 200, which the derived
    # table contradicts, so this is an invariant violation, not bad input.
    proc = run_cli("og6", "--chi", "1928")
    assert proc.returncode == 1
    assert "internal invariant violation" in proc.stderr


def test_og6_output_is_byte_deterministic():
    first = run_cli("og6", "--format", "json", "--trace")
    second = run_cli("og6", "--format", "json", "--trace")
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


# ---------------------------------------------------------------------------
# hilb


def test_hilb_json_round_trip():
    proc = run_cli("hilb", "--n", "2", "--format", "json")
    assert proc.returncode == 0, proc.stderr
    parsed = HodgeDiamond.from_json(proc.stdout)
    assert parsed == hilbert_scheme_diamond(surface_diamond("k3"), 2)


def test_hilb_text_output():
    proc = run_cli("hilb", "--n", "2")
    assert proc.returncode == 0, proc.stderr
    assert "k3^[2] Hodge diamond" in proc.stdout
    assert "232" in proc.stdout
    assert "Euler characteristic: 324" in proc.stdout


def test_hilb_latex_output():
    proc = run_cli("hilb", "--n", "2", "--format", "latex")
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.startswith("\\begin{array}")
    assert "232" in proc.stdout


def test_hilb_abelian_surface():
    proc = run_cli("hilb", "--n", "2", "--surface", "abelian",
                   "--format", "json")
    assert proc.returncode == 0, proc.stderr
    parsed = HodgeDiamond.from_json(proc.stdout)
    assert parsed == hilbert_scheme_diamond(surface_diamond("abelian"), 2)


def test_hilb_cap():
    assert run_cli("hilb", "--n", "99").returncode == 2
    assert run_cli("hilb", "--n", "-1").returncode == 2


def test_hilb_cap_override_via_env():
    ok = run_cli("hilb", "--n", "3", env_extra={"HODGE_MAX_N": "3"})
    assert ok.returncode == 0
    blocked = run_cli("hilb", "--n", "3", env_extra={"HODGE_MAX_N": "2"})
    assert blocked.returncode == 2
    bad = run_cli("hilb", "--n", "2", env_extra={"HODGE_MAX_N": "many"})
    assert bad.returncode == 2
    assert "HODGE_MAX_N" in bad.stderr


# ---------------------------------------------------------------------------
# check


def test_check_single_suite():
    proc = run_cli("check", "--suite", "salamon")
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "ok   " in proc.stdout
    assert "FAIL" not in proc.stdout
    assert proc.stdout.rstrip().endswith("checks passed")


def test_check_all_suites():
    proc = run_cli("check", "--suite", "all")
    assert proc.returncode == 0, proc.stdout + proc.stderr
    summary = proc.stdout.rstrip().splitlines()[-1]
    passed, total = summary.split()[0].split("/")
    assert passed == total
    assert int(total) >= 15


def test_check_unknown_suite_is_a_usage_error():
    proc = run_cli("check", "--suite", "bogus")
    assert proc.returncode == 2


def test_missing_subcommand_is_a_usage_error():
    proc = run_cli()
    assert proc.returncode == 2
