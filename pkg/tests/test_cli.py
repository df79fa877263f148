import csv
import io
import json

import pytest
from click.testing import CliRunner
from hypothesis import given
from hypothesis import strategies as st

from graphcx.cli import main, parse_range


def run(*args):
    return CliRunner().invoke(main, ["--quiet", *args])


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_d2check_passes():
    res = run("d2check", "--complex", "pgc,hgc", "--n", "6", "--j", "4", "--k", "1-2", "--g", "1")
    assert res.exit_code == 0, res.output
    table = rows(res.stdout)
    assert len(table) == 4 and all(r["result"] == "PASS" for r in table)


def test_cohomology_table():
    res = run("cohomology", "--complex", "pgc", "--n", "6", "--j", "4", "--k", "1", "--g", "1")
    assert res.exit_code == 0
    (row,) = rows(res.stdout)
    assert row["dim_basis"] == "1" and row["dim_cohomology"] == "1" and row["degree"] == "0"


def test_compare_and_json():
    res = run("compare", "--complex", "pgc',pgc,hh,hgc", "--n", "7", "--j", "5", "--k", "2",
              "--g", "1", "--format", "json")
    assert res.exit_code == 0
    out = json.loads(res.stdout)
    assert out and all(r["result"] == "equal" for r in out)


def test_dgc_compare():
    res = run("compare", "--complex", "dgc,pgc", "--n", "7", "--j", "5", "--k", "2", "--g", "1")
    assert res.exit_code == 0


@pytest.mark.parametrize("args", [
    ("d2check", "--n", "7", "--j", "1"),
    ("d2check", "--n", "5", "--j", "4"),
    ("compare", "--complex", "pgc"),
    ("d2check", "--complex", "nope"),
    ("barcheck", "--n", "6", "--j", "2", "--g", "4"),
    ("d2check", "--threads", "0"),
    ("toploop", "--n", "6", "--j", "3", "--g", "2"),
])
def test_usage_errors(args):
    assert run(*args).exit_code == 2


def test_budget_exit_code():
    res = run("cohomology", "--complex", "pgc'", "--n", "7", "--j", "5", "--k", "3", "--g", "2",
              "--budget", "10")
    assert res.exit_code == 3


def test_barcheck_modes():
    res = run("barcheck", "--n", "7", "--j", "5", "--k", "1-2", "--g", "0")
    assert res.exit_code == 0
    assert all(r["cohomology"] == '{"0": 1}' for r in rows(res.stdout))
    assert run("barcheck", "--n", "7", "--j", "5", "--k", "1", "--g", "0", "--literal").exit_code == 1


def test_toploop():
    res = run("toploop", "--n", "7", "--j", "5", "--g", "2", "--degree-max", "4")
    assert res.exit_code == 0
    assert [r["dim_graph"] for r in rows(res.stdout)] == ["0", "1", "0", "1"]


def test_enumerate_json():
    res = run("enumerate", "--complex", "hgc", "--n", "6", "--j", "4", "--k", "1", "--g", "1",
              "--format", "json")
    (entry,) = json.loads(res.stdout)
    (graph,) = entry["basis"]
    assert graph["vertices"] == ["ext", "white"]
    assert sorted((e["src"], e["dst"]) for e in graph["edges"]) == [(0, 1), (1, 1)]


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# example\ncomplex = pgc\nn = 6\nj = 4\nk = 1\ng = 1\n")
    base = run("cohomology", "--config", str(cfg))
    assert base.exit_code == 0 and rows(base.stdout)[0]["n"] == "6"
    over = run("cohomology", "--config", str(cfg), "--n", "7", "--j", "5", "--k", "2")
    assert rows(over.stdout)[0]["n"] == "7"
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = red\n")
    assert run("cohomology", "--config", str(bad)).exit_code == 2


def test_out_file(tmp_path):
    out = tmp_path / "t.csv"
    res = run("cohomology", "--complex", "hh", "--n", "6", "--j", "4", "--k", "1", "--g", "1", "--out", str(out))
    assert res.exit_code == 0 and res.stdout == ""
    assert rows(out.read_text())[0]["complex"] == "hh"


def test_thread_count_does_not_change_output():
    args = ("cohomology", "--complex", "pgc'", "--n", "7", "--j", "5", "--k", "3", "--g", "2")
    assert run(*args, "--threads", "1").stdout == run(*args, "--threads", "4").stdout


@given(st.lists(st.integers(0, 20), min_size=1, max_size=5))
def test_parse_range(values):
    assert parse_range(",".join(map(str, values))) == tuple(sorted(set(values)))
    lo, hi = min(values), max(values)
    assert parse_range(f"{lo}-{hi}") == parse_range(f"{lo}..{hi}") == tuple(range(lo, hi + 1))
