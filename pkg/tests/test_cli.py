import json

import pytest

from hookvanish.cli import main, parse_range, run_sweep
from hookvanish.errors import HookVanishError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


VANISH = ["vanish", "--n", "2", "--k", "2", "--m", "2", "--alpha", "0", "--p", "2", "--q", "2"]


def test_vanish_guaranteed(capsys):
    code, out, _ = run(capsys, *VANISH, "--e", "2")
    js = json.loads(out)
    assert code == 0
    assert js["schema"].startswith("hookvanish.vanish/")
    assert js["guaranteed_pq"] is True and js["threshold"] == 0


def test_vanish_not_guaranteed(capsys):
    code, out, _ = run(capsys, *VANISH, "--e", "4")
    assert code == 0 and json.loads(out)["guaranteed_pq"] is False


def test_vanish_zero_bundle(capsys):
    code, out, _ = run(capsys, "vanish", "--n", "1", "--e", "2", "--k", "3", "--m", "1",
                       "--alpha", "0", "--p", "1", "--q", "1")
    assert code == 0 and json.loads(out)["gamma_nonzero"] is False


def test_vanish_invalid_input(capsys):
    code, _, err = run(capsys, "vanish", "--n", "1", "--e", "2", "--k", "3", "--m", "1",
                       "--alpha", "5", "--p", "1", "--q", "1")
    assert code == 1 and "error" in err


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["vanish", "--bogus", "1"])


def test_schur_product_prints_serialization(capsys):
    code, out, _ = run(capsys, "schur", "--product", "1,1", "1", "--rank", "3")
    assert code == 0
    assert json.loads(out) == [{"partition": "1,1,1", "mult": 1}, {"partition": "2,1", "mult": 1}]


def test_schur_other_modes(capsys):
    assert json.loads(run(capsys, "schur", "--dim", "2,1", "--rank", "3")[1])["dimension"] == 8
    assert json.loads(run(capsys, "schur", "--oracle", "1", "1", "--rank", "2")[1]) == [
        {"partition": "1,1", "mult": 1}, {"partition": "2", "mult": 1}]
    assert json.loads(run(capsys, "schur", "--power", "2,1", "--times", "2", "--rank", "2")[1]) == [
        {"partition": "3,3", "mult": 1}, {"partition": "4,2", "mult": 1}]
    assert run(capsys, "schur", "--one-dim", "2,1", "--times", "2", "--rank", "2", "--format", "table")[1].strip() == "1"
    branch = json.loads(run(capsys, "schur", "--branch", "1,1", "--ea", "2", "--eb", "1")[1])
    assert branch == [{"a": "1", "b": "1", "mult": 1}, {"a": "1,1", "b": "", "mult": 1}]


def test_dominance_and_ns(capsys):
    assert run(capsys, "dominance", "3,2,2", "3,1,1,1,1")[1].strip() == "strictly_dominates"
    assert run(capsys, "dominance", "2,2", "1,1")[1].strip() == "equivalent"
    js = json.loads(run(capsys, "ns", "--r", "2")[1])
    assert js["entries"] == [{"s": 0, "a": 0, "n": 1}, {"s": 1, "a": 1, "n": 1},
                             {"s": 1, "a": 2, "n": 1}, {"s": 2, "a": 3, "n": 1}]


def test_audit_command(capsys):
    code, out, _ = run(capsys, "audit", "--n", "2", "--e", "3", "--k", "2", "--m", "1",
                       "--alpha0", "0", "--p0", "2", "--q0", "2")
    js = json.loads(out)
    assert code == 0 and js["pass"] is True and js["b_size"] == 1


def test_parse_range():
    assert parse_range("1..4", {}) == [1, 2, 3, 4]
    assert parse_range("0..n", {"n": 2}) == [0, 1, 2]
    assert parse_range("0..k-1", {"k": 3}) == [0, 1, 2]
    assert parse_range("2,5", {}) == [2, 5]
    assert parse_range("3..2", {}) == []
    with pytest.raises(HookVanishError):
        parse_range("0..z", {"n": 1})


def test_sweep_empty_grid(capsys):
    code, out, _ = run(capsys, "sweep", "audit", "--n", "3..2", "--e", "1", "--k", "1", "--m", "1")
    assert code == 0 and out == ""


def test_sweep_invalid_grid(capsys):
    code, _, err = run(capsys, "sweep", "audit", "--n", "1..x", "--e", "1", "--k", "1", "--m", "1")
    assert code == 1 and "error" in err


def test_sweep_vanish_monotone_in_q():
    header, rows = run_sweep("vanish", {"n": "1..3", "e": "1..4", "k": "1..4", "m": "1..2",
                                        "alpha": "0..k-1", "p": "1..n", "q": "0..n"}, ("p",))
    idx = header.index("guaranteed_pq")
    groups = {}
    for row in rows:
        groups.setdefault(tuple(row[:6]), []).append(row[idx])
    for flags in groups.values():
        assert flags == sorted(flags)


def test_sweep_rows_independent_of_workers():
    specs = {"n": "1..2", "e": "1..3", "k": "1..3", "m": "1..2", "alpha0": "0..k-1", "p0": "0..n", "q0": "0..n"}
    assert run_sweep("audit", specs, ("p", "q"), 1) == run_sweep("audit", specs, ("p", "q"), 3)
