"""Acceptance gate: one test per criterion, zero-tolerance, timed where stated.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per criterion.
"""

import json
import time

from solvsol import oracles, soliton, sweeps
from solvsol import heisenberg as hh
from solvsol import iwasawa as iw
from solvsol.linalg import Q

from conftest import session_elapsed


def _report(criterion: str, ok: bool, detail: str):
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} ({detail})", flush=True)
    assert ok, f"criterion {criterion}: {detail}"


def test_criterion_1_htype_identity_suite():
    t0 = time.monotonic()
    check = oracles.check_htype_identities(seed=0)
    elapsed = time.monotonic() - t0
    ok = check.ok and elapsed < 10
    _report("1", ok, f"{check.instances} exact identity instances in {elapsed:.1f}s (< 10s)")


def test_criterion_2_closed_form_ricci():
    check = oracles.check_ricci_closed_forms()
    _report("2", check.ok, f"{check.instances} spaces, Ricci matches closed forms exactly")


def test_criterion_3_master_oracle():
    t0 = time.monotonic()
    check = oracles.check_master_oracle(seed=0)
    elapsed = time.monotonic() - t0
    ok = check.ok and check.instances >= 120 and elapsed < 60
    _report(
        "3",
        ok,
        f"Gauss == intrinsic on {check.instances} hypersurfaces in {elapsed:.1f}s (>= 120, < 60s)",
    )


def test_criterion_4_theorem2_sweep_and_n81_latency():
    report = sweeps.run_sweep("thm2", seed=0)
    ok = report["summary"]["failed"] == 0
    t0 = time.monotonic()
    space = hh.build_named(8, 1)
    xi = hh.unit_xi_half_spin(space, "+", 99)
    sub, _ = space.base.orthogonal_complement_subalgebra(xi)
    verdict = soliton.decide(sub)
    elapsed = time.monotonic() - t0
    ok = ok and verdict.is_soliton and elapsed < 5
    _report(
        "4",
        ok,
        f"theorem-2 sweep {report['summary']['agreed']}/{report['summary']['rows']} rows; "
        f"fresh N(8,1) decision {elapsed:.2f}s (< 5s)",
    )


def test_criterion_5_theorem3_sweep():
    report = sweeps.run_sweep("thm3", seed=0)
    ok = report["summary"]["failed"] == 0
    lohnherr = [
        r
        for r in report["rows"]
        if r["space"] == "AN(1,1)" and r["xi_spec"].startswith("v:")
    ]
    for row in lohnherr:
        verdict = row["verdict"]
        ok = ok and verdict["c"] == "-5/4"
        ok = ok and verdict["D_eigenvalues"] == [["-1/4", 1], ["0", 1], ["1/2", 1]]
    _report(
        "5",
        ok and bool(lohnherr),
        f"theorem-3 sweep {report['summary']['agreed']}/{report['summary']['rows']} rows; "
        f"{len(lohnherr)} Lohnherr certificates pinned to c=-5/4, eigenvalues (-1/4, 0, 1/2)",
    )


def test_criterion_6_theorem1_sweep_and_subalgebra_characterization():
    t0 = time.monotonic()
    report = sweeps.run_sweep("thm1", seed=0)
    ok = report["summary"]["failed"] == 0
    for row in report["rows"]:
        if row["xi_spec"].startswith("a:rand"):
            ok = ok and row.get("horosphere_certificate") is True
    charact = oracles.check_subalgebra_characterization(seed=0)
    ok = ok and charact.ok and charact.instances >= 100
    horo = oracles.check_horospheres(seed=0)
    tilted = oracles.check_tilted_normals_negative()
    ok = ok and horo.ok and tilted.ok
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 60
    _report(
        "6",
        ok,
        f"theorem-1 sweep {report['summary']['agreed']}/{report['summary']['rows']} rows; "
        f"{charact.instances} normals against the subalgebra characterization; "
        f"{horo.instances} horosphere certificates; {elapsed:.1f}s (< 60s)",
    )


def test_criterion_7_iwasawa_closed_form_oracles():
    forms = oracles.check_iwasawa_closed_forms()
    lemmas = oracles.check_iwasawa_lemmas()
    conn = oracles.check_iwasawa_connection()
    ok = forms.ok and lemmas.ok and conn.ok
    _report(
        "7",
        ok,
        f"{forms.instances} closed-form operator values, {lemmas.instances} bracket/connection "
        f"identities, {conn.instances} connection agreements, all exact",
    )


def test_criterion_8_decision_soundness():
    check = oracles.check_decision_soundness(seed=0)
    _report(
        "8",
        check.ok,
        f"{check.instances} instances: re-verification, basis-change and metric-scaling invariance",
    )


def test_criterion_9_wall_clock_and_byte_stability():
    for suite in ("thm1", "thm2", "thm3", "oracles"):
        first = sweeps.strip_timestamp(sweeps.run_sweep(suite, seed=0))
        second = sweeps.strip_timestamp(sweeps.run_sweep(suite, seed=0))
        assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)
    elapsed = session_elapsed()
    ok = elapsed < 180
    _report(
        "9",
        ok,
        f"reports byte-stable at fixed seed; {elapsed:.0f}s elapsed so far "
        "(full-suite budget enforced at session end)",
    )
