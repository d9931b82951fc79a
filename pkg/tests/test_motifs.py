import pytest

from motifclust import (MotifSpec, ParseError, UnknownMotifError,
                        available_motifs, named_motif, parse_motif_literal,
                        resolve_motif)


def test_triad_catalog_shapes():
    for i in range(1, 14):
        spec = named_motif(f"M{i}")
        assert spec.k == 3
        assert spec.simple
        assert spec.name == f"M{i}"


def test_m1_is_the_directed_cycle():
    pat = named_motif("M1").pattern
    assert pat == ((0, 1, 0), (0, 0, 1), (1, 0, 0))


def test_m4_all_reciprocal():
    pat = named_motif("M4").pattern
    assert all(pat[i][j] == 1 for i in range(3) for j in range(3) if i != j)


def test_m5_feedforward():
    pat = named_motif("M5").pattern
    assert pat == ((0, 1, 1), (0, 0, 1), (0, 0, 0))


def test_name_lookup_is_case_and_separator_insensitive():
    assert named_motif("m3").name == "M3"
    assert named_motif("COHERENT_FFL").name == "coherent-ffl"
    assert named_motif("Clique4").name == "clique4"


def test_unknown_motif_lists_catalog():
    with pytest.raises(UnknownMotifError) as exc:
        named_motif("M99")
    assert "bifan" in str(exc.value)


def test_medge_has_two_variants():
    spec = named_motif("Medge")
    assert spec.k == 2
    assert len(spec.variants) == 2


def test_bifan_pattern():
    pat = named_motif("bifan").pattern
    edges = {(i, j) for i in range(4) for j in range(4) if pat[i][j]}
    assert edges == {(0, 2), (0, 3), (1, 2), (1, 3)}


def test_semiclique_pattern():
    pat = named_motif("semiclique").pattern
    # complete reciprocal 4-node pattern minus one reciprocal pair
    missing = {(i, j) for i in range(4) for j in range(4)
               if i != j and not pat[i][j]}
    assert missing == {(2, 3), (3, 2)}


def test_coherent_ffl_signs():
    spec = named_motif("coherent-ffl")
    assert spec.signed
    assert len(spec.variants) == 4
    for pat in spec.variants:
        s12, s13, s23 = pat[0][1], pat[0][2], pat[1][2]
        # the sign along the indirect path matches the direct edge
        assert s12 * s23 == s13


def test_clique_range_guard():
    assert named_motif("clique9").k == 9
    with pytest.raises(UnknownMotifError):
        named_motif("clique10")


def test_available_motifs_resolve():
    for name in available_motifs():
        assert named_motif(name).k >= 2


def test_spec_validation():
    with pytest.raises(ValueError):
        MotifSpec(3, ([[1, 1, 0], [0, 0, 1], [0, 0, 0]],), frozenset({0, 1}))
    with pytest.raises(ValueError):
        MotifSpec(3, ([[0, 2, 0], [0, 0, 1], [1, 0, 0]],), frozenset({0, 1}))
    with pytest.raises(ValueError):  # single anchor
        MotifSpec(2, ([[0, 1], [0, 0]],), frozenset({0}))
    with pytest.raises(ValueError):  # disconnected support
        MotifSpec(4, ([[0, 1, 0, 0], [1, 0, 0, 0],
                       [0, 0, 0, 1], [0, 0, 1, 0]],), frozenset(range(4)))


def test_parse_motif_literal_with_anchors():
    spec = parse_motif_literal("011\n001\n000\nanchors: 1,3\n")
    assert spec.k == 3
    assert spec.anchors == frozenset({0, 2})


def test_parse_motif_literal_signs():
    spec = parse_motif_literal("0+-\n000\n+00\n")
    assert spec.signed
    assert spec.pattern[0][2] == -1


def test_parse_motif_literal_errors():
    with pytest.raises(ParseError):
        parse_motif_literal("0x\n10\n")
    with pytest.raises(ParseError):
        parse_motif_literal("01\n10\nanchors: one,two\n")
    with pytest.raises(ParseError):
        parse_motif_literal("011\n000\n")  # not square


def test_resolve_motif_path(tmp_path):
    p = tmp_path / "pat.txt"
    p.write_text("01\n10\n")
    spec = resolve_motif(str(p))
    assert spec.name == "custom"
    assert resolve_motif("M1").name == "M1"
