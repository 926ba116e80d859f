"""Acceptance suite: one test per headline claim, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.  Criterion 6 writes artifacts/coblocker_counts.csv in the
repository root and checks that regeneration reproduces it byte for byte.
"""

import math
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

from cgg.blockers import (
    enumerate_blockers,
    star_blocker,
    validate_blocker,
    witness_missed_blocker,
)
from cgg.counting import (
    blocker_count,
    catalan,
    coblocker_bounds,
    count_table,
    generate_lower_bound_family,
)
from cgg.errors import DomainError
from cgg.geometry import GraphContext, edge_order, edges_cross
from cgg.matchings import (
    Matching,
    check_halfplane_property,
    check_quadrant_property,
    enumerate_perfect_matchings,
    enumerate_semi_simple,
    enumerate_spms,
    is_semi_simple,
)
from cgg.serialize import count_table_to_csv
from cgg.transversal import TransversalProblem, derive_sequence, hits_all, solve_min_transversals

ARTIFACTS = Path(__file__).resolve().parent.parent / "artifacts"


def _stamp(number: int, name: str, start: float, budget: float | None = None) -> None:
    elapsed = time.monotonic() - start
    if budget is not None:
        assert elapsed < budget, f"criterion {number} took {elapsed:.2f}s (budget {budget}s)"
    print(f"ACCEPTANCE-{number:02d} {name}: PASS ({elapsed:.2f}s)")


def test_acceptance_01_spm_counts():
    start = time.monotonic()
    for m in range(2, 9):
        assert len(enumerate_spms(GraphContext(m))) == catalan(m)
    _stamp(1, "spm-counts", start, 5.0)


def test_acceptance_02_blocker_counts():
    start = time.monotonic()
    for m in range(2, 11):
        family = enumerate_blockers(GraphContext(m))
        masks = {member.mask for member in family}
        assert len(masks) == len(family) == blocker_count(m)
    _stamp(2, "blocker-counts", start, 5.0)


def test_acceptance_03_blockers_are_the_minimum_transversals():
    start = time.monotonic()
    for m in range(2, 6):
        ctx = GraphContext(m)
        solution = solve_min_transversals(TransversalProblem(enumerate_spms(ctx)))
        assert solution.min_size == m
        assert solution.family == enumerate_blockers(ctx)
    _stamp(3, "blocker-transversals", start, 120.0)


def test_acceptance_04_coblockers_are_semi_simple():
    start = time.monotonic()
    for m in range(2, 6):
        ctx = GraphContext(m)
        solution = solve_min_transversals(TransversalProblem(enumerate_blockers(ctx)))
        assert solution.min_size == m
        assert solution.family == enumerate_semi_simple(ctx)
    _stamp(4, "coblocker-characterization", start, 120.0)


def test_acceptance_05_third_level_returns_to_first():
    start = time.monotonic()
    for m in range(2, 5):
        ctx = GraphContext(m)
        assert derive_sequence(ctx, 3) == derive_sequence(ctx, 1)
    _stamp(5, "fixed-point", start, 300.0)


def test_acceptance_06_coblocker_bounds_and_artifact():
    start = time.monotonic()
    reports = count_table(2, 8)
    for report in reports:
        lower, upper = coblocker_bounds(report.m)
        assert report.coblocker_count is not None
        assert lower <= report.coblocker_count <= upper
    ARTIFACTS.mkdir(exist_ok=True)
    target = ARTIFACTS / "coblocker_counts.csv"
    text = count_table_to_csv(reports)
    target.write_text(text, encoding="utf-8")
    assert count_table_to_csv(count_table(2, 8)) == text
    assert target.read_text(encoding="utf-8") == text
    _stamp(6, "coblocker-bounds", start, 60.0)


def test_acceptance_07_lower_bound_family():
    start = time.monotonic()
    for m in range(3, 13):
        ctx = GraphContext(m)
        family = generate_lower_bound_family(ctx)
        assert len(family) == math.factorial(m // 3)
        for member in family:
            assert is_semi_simple(Matching(ctx, member))
    _stamp(7, "lower-bound-family", start, 5.0)


def test_acceptance_08_boundary_visibility():
    start = time.monotonic()
    halfplane_checked = 0
    for m in range(2, 7):
        ctx = GraphContext(m)
        for member in enumerate_semi_simple(ctx):
            matching = Matching(ctx, member)
            edges = matching.edge_list()
            for e in edges:
                if edge_order(ctx, e) >= 2:
                    halfplane_checked += 1
                    assert check_halfplane_property(matching, e)
            for i in range(len(edges)):
                for j in range(i + 1, len(edges)):
                    if edges_cross(ctx, edges[i], edges[j]):
                        assert check_quadrant_property(matching, edges[i], edges[j])
    assert halfplane_checked > 0
    _stamp(8, "boundary-visibility", start, 60.0)


def test_acceptance_09_witness_totality():
    start = time.monotonic()
    for m in range(2, 6):
        ctx = GraphContext(m)
        checked = 0
        for member in enumerate_perfect_matchings(ctx):
            matching = Matching(ctx, member)
            if is_semi_simple(matching):
                with pytest.raises(DomainError):
                    witness_missed_blocker(ctx, matching)
                continue
            checked += 1
            witness = witness_missed_blocker(ctx, matching)
            assert validate_blocker(ctx, witness) is not None
            assert witness.isdisjoint(member)
        expected = len(enumerate_perfect_matchings(ctx)) - len(enumerate_semi_simple(ctx))
        assert checked == expected
    _stamp(9, "witness-totality", start, 60.0)


def test_acceptance_10_star_blockers():
    start = time.monotonic()
    for m in range(2, 9):
        ctx = GraphContext(m)
        members = {member.mask for member in enumerate_blockers(ctx)}
        for x in range(ctx.n):
            assert star_blocker(ctx, x).mask in members
    for m in range(2, 6):
        ctx = GraphContext(m)
        spms = enumerate_spms(ctx)
        for x in range(ctx.n):
            assert hits_all(star_blocker(ctx, x), spms)
    _stamp(10, "star-blockers", start)


def _run_cli(args, workdir, seed, threads):
    env = dict(os.environ)
    env.update(
        {
            "PYTHONHASHSEED": seed,
            "OMP_NUM_THREADS": threads,
            "OPENBLAS_NUM_THREADS": threads,
        }
    )
    proc = subprocess.run(
        [sys.executable, "-m", "cgg", *args],
        cwd=workdir,
        env=env,
        capture_output=True,
        check=False,
    )
    assert proc.returncode == 0, proc.stderr.decode()
    return proc.stdout


def test_acceptance_11_cli_determinism(tmp_path):
    start = time.monotonic()
    commands = [
        ["enumerate", "--m", "4", "--family", "blockers"],
        ["enumerate", "--m", "4", "--family", "coblockers", "--format", "csv"],
        ["verify", "--m", "3", "--check", "counts"],
        ["count", "--m-range", "2..6", "--plot", "chart.png"],
        [
            "render",
            "--m",
            "4",
            "--edges",
            "0-1,1-2,1-6,2-5",
            "--highlight",
            "spine=0-1;1-2,legs=1-6;2-5",
            "--out",
            "diagram.svg",
        ],
    ]
    variants = [("0", "1"), ("12345", "4")]
    outputs = []
    for i, (seed, threads) in enumerate(variants):
        rundir = tmp_path / f"run{i}"
        rundir.mkdir()
        stdouts = [_run_cli(cmd, rundir, seed, threads) for cmd in commands]
        _run_cli(
            ["enumerate", "--m", "3", "--family", "spm", "--out", "family.json"],
            rundir,
            seed,
            threads,
        )
        stdouts.append(_run_cli(["transversal", "--input", "family.json"], rundir, seed, threads))
        files = {
            name: (rundir / name).read_bytes()
            for name in ("chart.png", "diagram.svg", "family.json")
        }
        outputs.append((stdouts, files))
    assert outputs[0] == outputs[1]
    _stamp(11, "cli-determinism", start)
