"""The ten acceptance criteria, each as one test with its runtime cap."""

import subprocess
import sys
import time

import pytest


def timed(fn, cap_seconds):
    t0 = time.time()
    result = fn()
    elapsed = time.time() - t0
    assert elapsed < cap_seconds, f"took {elapsed:.1f}s, cap {cap_seconds}s"
    return result


def test_criterion_01_invariant_identities():
    from tmf3.verify import item_invariants
    r = timed(item_invariants, 5)
    assert r["pass"], r["detail"]


def test_criterion_02_map_formula_table():
    from tmf3.verify import item_map_formulas
    r = item_map_formulas()
    assert r["pass"], r["detail"]


def test_criterion_03_cosimplicial_identities():
    from tmf3.verify import item_cosimplicial
    r = timed(item_cosimplicial, 10)
    assert r["pass"], r["detail"]


def test_criterion_04_isogeny_verification():
    from tmf3.verify import item_isogeny
    r = timed(item_isogeny, 30)
    assert r["pass"], r["detail"]


def test_criterion_05_flex_iff_order_three():
    from tmf3.verify import item_flex
    r = item_flex()
    assert r["pass"], r["detail"]
    assert "50 positive" in r["detail"] and "10 negative" in r["detail"]


def test_criterion_06_normalization_round_trip():
    from tmf3.verify import item_normalize
    r = item_normalize()
    assert r["pass"], r["detail"]
    assert "50" in r["detail"]


def test_criterion_07_valuations():
    from tmf3.verify import item_valuations
    r = timed(item_valuations, 120)
    assert r["pass"], r["detail"]


def test_criterion_08_eisenstein_and_cocycles():
    from tmf3.verify import item_eisenstein
    r = item_eisenstein()
    assert r["pass"], r["detail"]


def test_criterion_09_spectral_sequence():
    from tmf3.verify import item_sseq
    r = timed(item_sseq, 300)
    assert r["pass"], r["detail"]


def test_criterion_10_cli_verify_all():
    t0 = time.time()
    proc = subprocess.run(
        [sys.executable, "-m", "tmf3.cli", "verify", "--all"],
        capture_output=True, text=True)
    elapsed = time.time() - t0
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "0 failures" in proc.stdout
    assert elapsed < 600, f"took {elapsed:.1f}s, cap 600s"
