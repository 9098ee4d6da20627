import csv
import io
import json
import subprocess
import sys

import pytest

from _fixtures import two_clique_graph, five_color_path_graph
from fairclique.cli import parse_range, run_to_string
from fairclique.graph import load_graph, write_attributes, write_edge_list
from fairclique.result import verify_fair_clique

SEARCH_KEYS = {"k", "delta", "size", "vertices", "count_a", "count_b", "reduction",
               "phases_ms", "nodes", "provenance"}
REDUCTION_KEYS = {"vertices_before", "vertices_after", "edges_before", "edges_after"}


def strip_timings(obj):
    if isinstance(obj, dict):
        return {k: strip_timings(v) for k, v in obj.items() if not k.endswith("_ms")}
    if isinstance(obj, list):
        return [strip_timings(x) for x in obj]
    return obj


@pytest.fixture
def two_clique_files(tmp_path):
    g = two_clique_graph()
    write_edge_list(g, tmp_path / "two_clique.edges")
    write_attributes(g, tmp_path / "two_clique.attrs")
    return str(tmp_path / "two_clique.edges"), str(tmp_path / "two_clique.attrs")


@pytest.fixture
def gen_files(tmp_path):
    e, a = str(tmp_path / "g.edges"), str(tmp_path / "g.attrs")
    code, _ = run_to_string(["gen", "--n", "60", "--p", "0.3", "--seed", "7", "--edges", e, "--attrs", a])
    assert code == 0
    return e, a


def test_search_two_clique_graph(two_clique_files):
    e, a = two_clique_files
    code, out = run_to_string(["search", "--edges", e, "--attrs", a, "--k", "3", "--delta", "1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 7
    assert SEARCH_KEYS <= set(payload)
    assert REDUCTION_KEYS <= set(payload["reduction"])
    assert verify_fair_clique(load_graph(e, a), payload["vertices"], 3, 1)
    assert len(payload["vertices"]) == payload["size"]


@pytest.mark.parametrize("flags", [["--no-heuristic"], ["--no-reduce"], ["--bounds", "none"],
                                   ["--bounds", "ad,cpath", "--parallel"], ["--node-limit", "100000"]])
def test_search_flags_keep_answer(two_clique_files, flags):
    e, a = two_clique_files
    code, out = run_to_string(["search", "--edges", e, "--attrs", a, "--k", "3", "--delta", "1"] + flags)
    assert code == 0 and json.loads(out)["size"] == 7


def test_search_text_and_csv(two_clique_files):
    e, a = two_clique_files
    base = ["search", "--edges", e, "--attrs", a, "--k", "3", "--delta", "1", "--format"]
    code, out = run_to_string(base + ["text"])
    assert code == 0 and "size: 7" in out
    code, out = run_to_string(base + ["csv"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows[0]["size"] == "7"


def test_bounds_five_color_path(tmp_path):
    g, col = five_color_path_graph()
    write_edge_list(g, tmp_path / "e")
    write_attributes(g, tmp_path / "a")
    (tmp_path / "c").write_text("".join(f"{x} {c}\n" for x, c in enumerate(col.colors)))
    code, out = run_to_string(["bounds", "--edges", str(tmp_path / "e"), "--attrs", str(tmp_path / "a"),
                               "--colors", str(tmp_path / "c"), "--k", "3", "--delta", "1",
                               "--bounds", "ad,cpath"])
    assert code == 0
    payload = json.loads(out)
    assert payload["ub_cp"] == 5
    assert payload["ub_ad"] == min(payload[x] for x in ("ub_s", "ub_a", "ub_c", "ub_ac", "ub_eac"))


def test_gen_is_byte_identical(tmp_path):
    outs = []
    for tag in ("x", "y"):
        e, a = tmp_path / f"{tag}.e", tmp_path / f"{tag}.a"
        assert run_to_string(["gen", "--n", "100", "--p", "0.3", "--seed", "7",
                              "--edges", str(e), "--attrs", str(a)])[0] == 0
        outs.append((e.read_bytes(), a.read_bytes()))
    assert outs[0] == outs[1]
    code, out = run_to_string(["gen", "--n", "50", "--m", "100", "--seed", "1",
                               "--edges", str(tmp_path / "m.e"), "--attrs", str(tmp_path / "m.a")])
    assert code == 0 and json.loads(out)["m"] == 100


def test_reduce_writes_residual(tmp_path, gen_files):
    e, a = gen_files
    re_, ra = str(tmp_path / "r.e"), str(tmp_path / "r.a")
    code, out = run_to_string(["reduce", "--edges", e, "--attrs", a, "--k", "2",
                               "--write-edges", re_, "--write-attrs", ra])
    assert code == 0
    payload = json.loads(out)
    residual = load_graph(re_, ra)
    assert residual.num_vertices == payload["reduction"]["vertices_after"] == len(payload["labels"])
    assert residual.num_edges == payload["reduction"]["edges_after"]


def test_heuristic_and_oracle(gen_files):
    e, a = gen_files
    code, out = run_to_string(["oracle", "--edges", e, "--attrs", a, "--k", "2", "--delta", "1"])
    assert code == 0
    exact = json.loads(out)["size"]
    code, out = run_to_string(["heuristic", "--edges", e, "--attrs", a, "--k", "2", "--delta", "1"])
    assert code == 0
    assert json.loads(out)["size"] <= exact
    code, _ = run_to_string(["oracle", "--edges", e, "--attrs", a, "--k", "2", "--delta", "1",
                             "--size-limit", "10"])
    assert code == 2


def test_bench(gen_files):
    e, a = gen_files
    code, out = run_to_string(["bench", "--edges", e, "--attrs", a, "--k", "1..4", "--delta", "1"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["k", "delta", "size", "nodes", "reduce_ms", "search_ms", "total_ms"]
    assert [int(r["k"]) for r in rows] == [1, 2, 3, 4]
    sizes = [int(r["size"]) for r in rows]
    assert sizes == sorted(sizes, reverse=True)
    for r in rows:
        assert float(r["total_ms"]) + 1e-6 >= float(r["reduce_ms"]) + float(r["search_ms"]) - 0.01
    code, out = run_to_string(["bench", "--edges", e, "--attrs", a, "--k", "2,3", "--delta", "0..2"])
    keys = [(r["k"], r["delta"]) for r in csv.DictReader(io.StringIO(out))]
    assert keys == [("2", "0"), ("2", "1"), ("2", "2"), ("3", "0"), ("3", "1"), ("3", "2")]


def test_seed_instead_of_attrs(gen_files):
    e, _ = gen_files
    args = ["search", "--edges", e, "--seed", "3", "--k", "1", "--delta", "0"]
    (c1, o1), (c2, o2) = run_to_string(args), run_to_string(args)
    assert c1 == c2 == 0
    assert strip_timings(json.loads(o1)) == strip_timings(json.loads(o2))


@pytest.mark.parametrize("argv,code", [
    (["search", "--edges", "/nonexistent/e", "--seed", "1", "--k", "1", "--delta", "0"], 1),
    (["search", "--edges", "{e}", "--k", "1", "--delta", "0"], 2),
    (["search", "--edges", "{e}", "--attrs", "{a}", "--k", "0", "--delta", "0"], 2),
    (["search", "--edges", "{e}", "--attrs", "{a}", "--k", "1", "--delta", "0", "--bounds", "zzz"], 2),
    (["search", "--edges", "{bad}", "--attrs", "{a}", "--k", "1", "--delta", "0"], 2),
    (["gen", "--n", "5", "--p", "0.5", "--edges", "{x}", "--attrs", "{y}"], 2),
    (["gen", "--n", "5", "--p", "1.5", "--seed", "1", "--edges", "{x}", "--attrs", "{y}"], 2),
    (["gen", "--n", "3", "--m", "9", "--seed", "1", "--edges", "{x}", "--attrs", "{y}"], 2),
    (["bench", "--edges", "{e}", "--attrs", "{a}", "--k", "4..2", "--delta", "0"], 2),
    (["frobnicate"], 2),
])
def test_exit_codes(tmp_path, gen_files, argv, code):
    e, a = gen_files
    bad = tmp_path / "bad"
    bad.write_text("0 1\n1 zz\n")
    subs = {"e": e, "a": a, "bad": str(bad), "x": str(tmp_path / "x"), "y": str(tmp_path / "y")}
    argv = [x.format(**subs) for x in argv]
    assert run_to_string(argv)[0] == code


def test_unwritable_output_is_io_error(tmp_path):
    code, _ = run_to_string(["gen", "--n", "5", "--p", "0.5", "--seed", "1",
                             "--edges", str(tmp_path / "no" / "dir" / "e"), "--attrs", str(tmp_path / "a")])
    assert code == 1


def test_determinism_across_subcommands(gen_files):
    e, a = gen_files
    common = ["--edges", e, "--attrs", a, "--k", "2"]
    commands = [["search"] + common + ["--delta", "1"],
                ["reduce"] + common,
                ["bounds"] + common + ["--delta", "1"],
                ["heuristic"] + common + ["--delta", "1"],
                ["oracle"] + common + ["--delta", "1"]]
    for argv in commands:
        first, second = run_to_string(argv), run_to_string(argv)
        assert first[0] == second[0] == 0
        assert strip_timings(json.loads(first[1])) == strip_timings(json.loads(second[1]))
    bench = ["bench", "--edges", e, "--attrs", a, "--k", "1..3", "--delta", "0,1"]
    rows = [[{k: v for k, v in r.items() if not k.endswith("_ms")}
             for r in csv.DictReader(io.StringIO(run_to_string(bench)[1]))] for _ in range(2)]
    assert rows[0] == rows[1]


def test_parse_range():
    assert parse_range("2..4") == [2, 3, 4]
    assert parse_range("3,1,3") == [1, 3]
    assert parse_range("5") == [5]


def test_module_entry_point(two_clique_files):
    e, a = two_clique_files
    proc = subprocess.run([sys.executable, "-m", "fairclique", "search", "--edges", e, "--attrs", a,
                           "--k", "3", "--delta", "1"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["size"] == 7
