import json

import pytest

from ritz_majorize.cli import EXIT_CONJECTURE, EXIT_OK, EXIT_PROVEN, EXIT_USAGE, build_parser, main


def test_every_subcommand_has_common_flags():
    parser = build_parser()
    for cmd, extra in (("verify", []), ("repro", []), ("search", ["ritz-sin"]), ("fem-demo", [])):
        args = parser.parse_args([cmd, *extra, "--seed", "3", "--trials", "5", "--tol", "1e-8",
                                  "--out", "x", "--format", "csv"])
        assert (args.seed, args.trials, args.tol, args.out, args.format) == (3, 5, 1e-8, "x", "csv")


def test_seed_env_override(monkeypatch):
    monkeypatch.setenv("RITZ_MAJORIZE_SEED", "77")
    assert build_parser().parse_args(["repro"]).seed == 77
    assert build_parser().parse_args(["repro", "--seed", "1"]).seed == 1
    monkeypatch.setenv("RITZ_MAJORIZE_SEED", "abc")
    with pytest.raises(SystemExit) as exc:
        build_parser()
    assert exc.value.code == EXIT_USAGE


def test_repro(capsys):
    assert main(["repro"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert [(d["bound_id"], d["holds"]) for d in data] == [
        ("spread-sin2", True), ("conj-spread-sin-divided", False), ("rel-sinA2-maj", False)]


def test_repro_csv_to_file(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["repro", "counterexample-1", "--format", "csv", "--out", str(out)]) == EXIT_OK
    assert len(out.read_text().strip().splitlines()) == 3


def test_search_exit_codes(tmp_path, capsys):
    assert main(["search", "conj-spread-sin", "--trials", "50"]) == EXIT_OK
    assert "conjecture supported" in capsys.readouterr().err
    witness = tmp_path / "w.json"
    code = main(["search", "conj-spread-sin-divided", "--regime", "n4", "--trials", "2000",
                 "--max-violations", "1", "--witness", str(witness), "--out", str(tmp_path / "v.json")])
    assert code == EXIT_CONJECTURE
    assert json.loads(witness.read_text())["n"] == 4
    assert main(["search", "top-sin2", "--trials", "50"]) == EXIT_OK


def test_search_proven_violation_exit_code(monkeypatch, capsys):
    import ritz_majorize.harness.violation_search as search_mod
    from ritz_majorize.bounds import BoundReport

    real = search_mod.check_spec

    def broken(bound_id, spec, tol=1e-9, tol_strict=1e-8):
        r = real(bound_id, spec, tol, tol_strict)
        if r is None or not r.precondition_ok:
            return r
        return BoundReport(r.bound_id, r.status, True, (), r.lhs, r.rhs, r.relation, False, r.margins, 1)

    monkeypatch.setattr(search_mod, "check_spec", broken)
    assert main(["search", "ritz-sin", "--trials", "3", "--max-violations", "1"]) == EXIT_PROVEN


def test_verify_small(capsys):
    code = main(["verify", "--trials", "20", "--bounds", "ritz-sin", "top-sin2", "--kinds", "lidskii"])
    assert code == EXIT_OK
    assert json.loads(capsys.readouterr().out) == []
    assert main(["verify", "--trials", "200", "--bounds", "rel-sinA2-maj", "--kinds"]) == EXIT_CONJECTURE


def test_fem_demo(capsys):
    assert main(["fem-demo", "--format", "csv"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("h,")
    assert main(["fem-demo", "--alpha", "2"]) == EXIT_USAGE


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["search", "no-such-bound"])
    assert exc.value.code == EXIT_USAGE
    assert main(["repro", "--trials", "0"]) == EXIT_USAGE
