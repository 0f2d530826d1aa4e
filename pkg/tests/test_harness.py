import json
import math

import numpy as np
import pytest

from ritz_majorize.bounds import evaluate
from ritz_majorize.errors import InvalidInput, IoError
from ritz_majorize.harness import (InstanceSpec, dumps, emit, fem_demo, fem_row, generate, repro,
                                   rows_to_text, sample_spec, search)
from ritz_majorize.harness.counterexamples import case_instance, matches_expectation
from ritz_majorize.harness.instances import shrink_candidates
from ritz_majorize.subspaces import angles, classify


def planted(theta, n=6, seed=0):
    return InstanceSpec(n=n, dim_x=len(theta), dim_y=len(theta), spectrum=tuple(range(n, 0, -1)),
                        y_kind="planted-angles", angles=tuple(theta), seed=seed)


def test_instance_spec_validation():
    with pytest.raises(InvalidInput):
        InstanceSpec(n=3, dim_x=2, dim_y=1, spectrum=(3, 2, 1))
    with pytest.raises(InvalidInput):
        InstanceSpec(n=3, dim_x=1, dim_y=1, spectrum=(1, 2, 3))
    with pytest.raises(InvalidInput):
        InstanceSpec(n=3, dim_x=2, dim_y=2, spectrum=(3, 2, 1), y_kind="planted-angles", angles=(0, 0))
    with pytest.raises(InvalidInput):
        InstanceSpec(n=4, dim_x=1, dim_y=1, spectrum=(4, 3, 2, 1), x_kind="sideways")
    s = planted([0.1, 0.2])
    assert InstanceSpec.from_dict(json.loads(json.dumps(s.to_dict()))) == s


def test_generate_structure():
    spec = InstanceSpec(n=7, dim_x=2, dim_y=4, spectrum=tuple(np.linspace(3, -3, 7)),
                        x_kind="contiguous-top", y_kind="perturb", eps=1e-3, seed=4)
    a, x, y = generate(spec)
    np.testing.assert_allclose(np.linalg.eigvalsh(a)[::-1], spec.spectrum, atol=1e-13)
    assert x.dim == 2 and y.dim == 4
    assert classify(x, a).label == "contiguous-top"
    assert np.max(angles(x, y)) < 1e-2
    spec = InstanceSpec(n=7, dim_x=3, dim_y=3, spectrum=tuple(np.linspace(3, -3, 7)),
                        x_kind="contiguous-bottom", y_kind="random", seed=4)
    a, x, _ = generate(spec)
    assert classify(x, a).label == "contiguous-bottom"
    spec = InstanceSpec(n=7, dim_x=3, dim_y=3, spectrum=tuple(np.linspace(3, -3, 7)),
                        x_kind="invariant-random", y_kind="random", seed=4)
    a, x, _ = generate(spec)
    assert classify(x, a).invariant


def test_generate_is_deterministic():
    spec = sample_spec("ritz-sin", 123)
    a1, x1, y1 = generate(spec)
    a2, x2, y2 = generate(spec)
    np.testing.assert_array_equal(a1, a2)
    np.testing.assert_array_equal(y1.basis, y2.basis)


def test_planted_angles_examples():
    _, x, y = generate(planted([0.0, 0.0]))
    np.testing.assert_allclose(angles(x, y), [0, 0], atol=1e-15)
    _, x, y = generate(planted([math.pi / 2, math.pi / 2]))
    np.testing.assert_allclose(angles(x, y), [math.pi / 2] * 2, atol=1e-12)
    _, x, y = generate(planted([math.pi / 3, 1e-8]))
    got = angles(x, y)
    assert abs(got[0] - math.pi / 3) <= 1e-4 * math.pi / 3
    assert abs(got[1] - 1e-8) <= 1e-4 * 1e-8


def test_planted_round_trip_many():
    rng = np.random.default_rng(8)
    for i in range(1000):
        p = int(rng.integers(1, 4))
        theta = np.sort(rng.uniform(0, math.pi / 2, p) * 10.0 ** rng.uniform(-8, 0, p))[::-1]
        _, x, y = generate(planted(theta, n=2 * p + int(rng.integers(0, 3)), seed=i))
        got = angles(x, y)
        assert np.all(np.abs(got - theta) <= 1e-4 * theta + 1e-10)


def test_repro_verdicts():
    recs = repro("counterexample-1")
    assert [(r.report.bound_id, r.report.holds) for r in recs] == [
        ("spread-sin2", True), ("conj-spread-sin-divided", False)]
    assert matches_expectation("counterexample-1", recs)
    recs = repro("counterexample-2")
    assert [(r.report.bound_id, r.report.holds) for r in recs] == [("rel-sinA2-maj", False)]
    with pytest.raises(InvalidInput):
        repro("counterexample-3")


def test_repro_basis_independence():
    rng = np.random.default_rng(1)
    base = repro("counterexample-1")
    _, _, y = case_instance("counterexample-1")
    for _ in range(20):
        alt = y.basis @ rng.standard_normal((2, 2))
        recs = repro("counterexample-1", alt)
        assert [r.report.holds for r in recs] == [r.report.holds for r in base]
        for r, b in zip(recs, base):
            np.testing.assert_allclose(r.report.lhs, b.report.lhs, atol=1e-12)
    with pytest.raises(InvalidInput):
        repro("counterexample-1", np.eye(4)[:, 2:])


def test_search_no_violation_for_proven():
    res = search("spread-sin2", 300, "contiguous-top", seed=3)
    assert res.trials == 300 and res.violation_count == 0 and res.min_violation is None


def test_search_finds_and_shrinks_divided():
    res = search("conj-spread-sin-divided", 2000, "auto", seed=1, max_violations=3)
    assert res.violation_count == 3
    assert res.min_violation is not None and res.min_violation.spec.n <= 4
    assert res.reverify()
    # re-evaluation from the stored spec, not the stored report
    a, x, y = generate(res.min_violation.spec)
    r = evaluate("conj-spread-sin-divided", a, x, y)
    assert r.precondition_ok and not r.holds


def test_search_deterministic_and_schedule_free():
    r1 = search("conj-spread-sin-divided", 200, "n4", seed=9)
    r2 = search("conj-spread-sin-divided", 200, "n4", seed=9)
    assert r1.violation_count == r2.violation_count
    assert [v.spec for v in r1.violations] == [v.spec for v in r2.violations]
    assert dumps([v.record() for v in r1.violations]) == dumps([v.record() for v in r2.violations])


def test_search_arguments():
    with pytest.raises(InvalidInput):
        search("ritz-sin", 0)
    with pytest.raises(InvalidInput):
        search("nope", 10)
    with pytest.raises(InvalidInput):
        sample_spec("ritz-sin", 0, regime="huge")


def test_shrink_candidates_shrink():
    rng = np.random.default_rng(0)
    spec = sample_spec("nq-sin2", 5)
    spec = InstanceSpec(**{**spec.to_dict(), "n": 12, "spectrum": tuple(np.linspace(1, -1, 12)),
                           "dim_x": 3, "dim_y": 7, "angles": None, "y_kind": "perturb"})
    cands = shrink_candidates(spec, rng)
    assert cands[0].n == 6 and cands[0].dim_y <= 6
    assert cands[1].eps == spec.eps / 2


def test_emit_json_schema(tmp_path):
    path = tmp_path / "r.json"
    emit(repro("counterexample-1"), "json", path)
    data = json.loads(path.read_text())
    assert [d["holds"] for d in data] == [True, False]
    assert set(data[0]) == {"bound_id", "status", "precondition_ok", "lhs", "rhs", "relation", "holds",
                            "prefix_margins", "instance"}
    assert set(data[0]["instance"]) == {"seed", "n", "dim_x", "dim_y"}


def test_emit_csv_and_empty(tmp_path):
    text = dumps(repro("counterexample-1"), "csv")
    lines = text.strip().splitlines()
    assert len(lines) == 3
    header = lines[0].split(",")
    holds = [row.split(",")[header.index("holds")] for row in lines[1:]]
    assert holds == ["true", "false"]
    assert dumps([], "json").strip() == "[]"
    assert dumps([], "csv").strip().splitlines() == [lines[0]]
    with pytest.raises(InvalidInput):
        dumps([], "xml")
    with pytest.raises(IoError):
        emit([], "json", tmp_path / "missing-dir" / "x.json")


def test_emit_deterministic(tmp_path):
    for fmt in ("json", "csv"):
        p1, p2 = tmp_path / f"a.{fmt}", tmp_path / f"b.{fmt}"
        emit([v.record() for v in search("conj-spread-sin-divided", 50, "n4", seed=2).violations], fmt, p1)
        emit([v.record() for v in search("conj-spread-sin-divided", 50, "n4", seed=2).violations], fmt, p2)
        assert p1.read_bytes() == p2.read_bytes()


def test_fem_examples():
    rows = fem_demo(1.0, 1.0, 0.6, [1e-1, 1e-2, 1e-3])
    for r in rows:
        assert abs(r.ratio - r.closed_form_ratio) <= 1e-6
        assert r.trace_error <= r.majorization_bound
        assert r.within_bounds and r.nq_sin2_holds and r.nq_log_tan_holds
    assert abs(rows[-1].ratio - 0.5) <= 0.05 * 0.5
    edge = fem_row(1.0, 1.0, 1.0, 1.0)
    assert edge.sin_large == pytest.approx(1.0) and edge.sin_small == pytest.approx(1.0)
    assert edge.ratio == pytest.approx(1.0)
    for bad in ((1.0, 2.0, 0.5, 0.1), (1.0, 1.0, 0.0, 0.1), (1.0, 1.0, 0.5, 0.0), (1.0, 0.0, 0.5, 0.1)):
        with pytest.raises(InvalidInput):
            fem_row(*bad)
    assert json.loads(rows_to_text(rows))[0]["h"] == 0.1
    assert rows_to_text(rows, "csv").splitlines()[0].startswith("h,")
