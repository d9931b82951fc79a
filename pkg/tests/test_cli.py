import json
import os

import pytest

from motifclust.cli import main

CYCLE = "a b\nb c\nc a\n"
BARBELL = ("a b\nb a\nb c\nc b\na c\nc a\n"
           "d e\ne d\ne f\nf e\nd f\nf d\n"
           "c d\nd c\n")


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


@pytest.fixture
def graph_file(tmp_path):
    p = tmp_path / "g.tsv"
    p.write_text(CYCLE)
    return str(p)


def test_motifs_list(capsys):
    assert main(["motifs", "list"]) == 0
    out = capsys.readouterr().out.split()
    assert "M1" in out and "bifan" in out and "clique9" in out


def test_build_wm_outputs(tmp_path, graph_file):
    out = str(tmp_path / "out")
    assert main(["build-wm", "--input", graph_file, "--motif", "M1",
                 "--out", out]) == 0
    coords = _read(os.path.join(out, "wm-coordinates.tsv")).splitlines()
    assert coords == ["0\t1\t1", "0\t2\t1", "1\t2\t1"]
    summary = json.loads(_read(os.path.join(out, "summary.json")))
    assert summary["nodes"] == 3 and summary["component_sizes"] == [3]
    labels = _read(os.path.join(out, "node-labels.tsv")).splitlines()
    assert labels == ["0\ta", "1\tb", "2\tc"]


def test_cluster_sweep_barbell(tmp_path):
    src = tmp_path / "barbell.tsv"
    src.write_text(BARBELL)
    out = str(tmp_path / "out")
    assert main(["cluster", "--input", str(src), "--motif", "Medge",
                 "--out", out, "--method", "sweep"]) == 0
    report = json.loads(_read(os.path.join(out, "report.json")))
    assert report["best_phi"] == pytest.approx(1 / 7)
    profile = _read(os.path.join(out, "profile.csv")).splitlines()
    assert profile[0] == "r,phi" and len(profile) == 6
    best = _read(os.path.join(out, "best-set.txt")).split()
    assert best in (["a", "b", "c"], ["d", "e", "f"])
    part = dict(line.split("\t")
                for line in _read(os.path.join(out, "partition.tsv")).splitlines())
    assert len(set(part.values())) == 2


def test_cluster_recursive_and_kmeans(tmp_path):
    src = tmp_path / "barbell.tsv"
    src.write_text(BARBELL)
    for method in ("recursive", "embed-kmeans"):
        out = str(tmp_path / method)
        assert main(["cluster", "--input", str(src), "--motif", "Medge",
                     "--out", out, "--method", method, "--k", "2"]) == 0
        part = dict(line.split("\t") for line in
                    _read(os.path.join(out, "partition.tsv")).splitlines())
        groups = {}
        for lab, c in part.items():
            groups.setdefault(c, set()).add(lab)
        assert {frozenset(v) for v in groups.values()} == \
            {frozenset("abc"), frozenset("def")}, method


def test_certify_single_cycle(tmp_path, graph_file):
    out = str(tmp_path / "out")
    assert main(["certify", "--input", graph_file, "--motif", "M1",
                 "--out", out]) == 0
    rep = json.loads(_read(os.path.join(out, "cheeger-report.json")))
    assert rep["phi_star"] == 1.0
    assert rep["upper_ok"] and rep["lower_ok"]
    assert rep["lower_bound"] <= 1.0


def test_score_roundtrip(tmp_path):
    pred = tmp_path / "pred.tsv"
    truth = tmp_path / "truth.tsv"
    pred.write_text("a\t0\nb\t0\nc\t1\n")
    truth.write_text("a\tx\nb\tx\nc\ty\n")
    out = str(tmp_path / "out")
    assert main(["score", "--pred", str(pred), "--truth", str(truth),
                 "--out", out]) == 0
    scores = json.loads(_read(os.path.join(out, "scores.json")))
    assert scores == {"ari": 1.0, "nmi": 1.0, "purity": 1.0, "pair_f1": 1.0}


def test_score_coverage_mismatch_exit_code(tmp_path):
    pred = tmp_path / "pred.tsv"
    truth = tmp_path / "truth.tsv"
    pred.write_text("a\t0\n")
    truth.write_text("b\t0\n")
    assert main(["score", "--pred", str(pred), "--truth", str(truth)]) == 2


def test_exit_codes(tmp_path, graph_file):
    assert main([]) == 1                                   # usage
    assert main(["build-wm", "--input", str(tmp_path / "no.tsv"),
                 "--motif", "M1", "--out", str(tmp_path / "o")]) == 2
    assert main(["build-wm", "--input", graph_file, "--motif", "nope",
                 "--out", str(tmp_path / "o")]) == 2


def test_custom_motif_file(tmp_path, graph_file):
    pat = tmp_path / "pat.txt"
    pat.write_text("010\n001\n100\n")
    out = str(tmp_path / "out")
    assert main(["build-wm", "--input", graph_file, "--motif", str(pat),
                 "--out", out]) == 0
    summary = json.loads(_read(os.path.join(out, "summary.json")))
    assert summary["motif"] == "custom" and summary["wm_nonzeros"] == 3


def test_determinism_two_runs(tmp_path):
    src = tmp_path / "barbell.tsv"
    src.write_text(BARBELL)
    outputs = []
    for tag in ("r1", "r2"):
        out = tmp_path / tag
        for cmd in (["build-wm"], ["cluster", "--method", "sweep"],
                    ["cluster", "--method", "embed-kmeans", "--k", "2"],
                    ["certify"]):
            sub = str(out / cmd[-1])
            assert main(cmd[:1] + ["--input", str(src), "--motif", "Medge",
                                   "--out", sub, "--seed", "0"]
                        + cmd[1:]) == 0
        blob = {}
        for root, _, files in os.walk(out):
            for f in sorted(files):
                with open(os.path.join(root, f), "rb") as fh:
                    blob[os.path.relpath(os.path.join(root, f), out)] = fh.read()
        outputs.append(blob)
    assert outputs[0] == outputs[1]
