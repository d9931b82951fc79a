"""Loader and pipeline tests on small synthetic stand-ins.

The real case-study networks are validated in the acceptance suite when
provisioned; here the same loaders and pipelines run on toy files placed in
$MOTIFCLUST_DATA, so the data path stays covered either way.
"""

import pytest

from motifclust import DatasetMissingError, ParseError
from motifclust.datasets import (celegans_report, data_path, load_celegans,
                                 load_florida_bay, load_florida_bay_classes,
                                 load_yeast, load_yeast_ffl_labels,
                                 yeast_report)


@pytest.fixture
def data_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("MOTIFCLUST_DATA", str(tmp_path))
    return tmp_path


def test_missing_dataset_message_names_file(data_dir):
    with pytest.raises(DatasetMissingError) as exc:
        data_path("florida-bay-edges.tsv")
    assert "florida-bay-edges.tsv" in str(exc.value)
    assert "MOTIFCLUST_DATA" in str(exc.value)


def test_env_dir_takes_priority(data_dir):
    (data_dir / "florida-bay-edges.tsv").write_text("a b\n")
    g = load_florida_bay()
    assert g.node_count == 2


def test_classes_loader_and_errors(data_dir):
    (data_dir / "florida-bay-edges.tsv").write_text("a b\nb c\n")
    g = load_florida_bay()
    (data_dir / "florida-bay-classes.tsv").write_text("a 1\nb 1\nc 2\n")
    truth = load_florida_bay_classes(g)
    assert truth == {0: "1", 1: "1", 2: "2"}
    (data_dir / "florida-bay-classes.tsv").write_text("zz 1\n")
    with pytest.raises(ParseError):
        load_florida_bay_classes(g)


def test_celegans_pipeline_on_toy_graph(data_dir):
    # two bifans sharing no nodes, connected by a stray edge
    edges = ["a c", "a d", "b c", "b d",
             "e g", "e h", "f g", "f h", "d e"]
    (data_dir / "celegans-frontal-edges.tsv").write_text(
        "\n".join(edges) + "\n")
    g = load_celegans()
    rep = celegans_report(g)
    assert rep["bifan"].component_sizes == [4, 4]
    assert rep["bifan"].component_size == 4


def test_yeast_pipeline_on_toy_graph(data_dir):
    # two coherent feedforward loops in separate components
    edges = ["a\tb\t+1", "a\tc\t+1", "b\tc\t+1",
             "d\te\t-1", "d\tf\t+1", "e\tf\t-1",
             "x\ty\t+1"]
    (data_dir / "yeast-edges.tsv").write_text("\n".join(edges) + "\n")
    (data_dir / "yeast-ffl-labels.tsv").write_text(
        "a\tb\tc\tfn1\nd\te\tf\tfn2\n")
    g = load_yeast()
    labels = load_yeast_ffl_labels(g)
    assert len(labels) == 2
    rep = yeast_report(g)
    assert rep["n_motif_active"] == 6
    # the pipeline sweep-splits the largest component, which on a 3-node
    # component necessarily breaks that loop's coherence
    assert rep["n_labeled"] == 2 and rep["n_coherent"] == 1
    assert rep["accuracy"] == pytest.approx(0.5)


def test_yeast_label_loader_rejects_unknown_nodes(data_dir):
    (data_dir / "yeast-edges.tsv").write_text("a\tb\t+1\n")
    (data_dir / "yeast-ffl-labels.tsv").write_text("a\tb\tzz\tfn1\n")
    g = load_yeast()
    with pytest.raises(ParseError):
        load_yeast_ffl_labels(g)
