"""Motif specifications: named catalog, custom literals, and validation.

A motif is a k-node edge pattern (entries 0 / +1 / -1, zero diagonal) plus an
anchor set of at least two node positions.  A spec may carry several pattern
variants that are matched as a union (e.g. the plain-edge motif matches both
the one-way edge and the reciprocal pair; the coherent feedforward loop has
four sign variants).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ParseError, UnknownMotifError


def _as_pattern(rows):
    return tuple(tuple(int(x) for x in r) for r in rows)


def _support_connected(pattern):
    k = len(pattern)
    adj = [set() for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if pattern[i][j]:
                adj[i].add(j)
                adj[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == k


@dataclass(frozen=True)
class MotifSpec:
    """A k-node motif: pattern variant(s), anchors, optional node colors."""

    k: int
    variants: tuple
    anchors: frozenset
    colors: tuple = None
    name: str = None

    def __post_init__(self):
        variants = tuple(_as_pattern(v) for v in self.variants)
        object.__setattr__(self, "variants", variants)
        object.__setattr__(self, "anchors", frozenset(self.anchors))
        if self.k < 2:
            raise ValueError("motif needs at least 2 nodes")
        if len(self.anchors) < 2 or not self.anchors <= set(range(self.k)):
            raise ValueError("anchor set must hold >= 2 valid node positions")
        for pat in variants:
            if len(pat) != self.k or any(len(r) != self.k for r in pat):
                raise ValueError("pattern must be k x k")
            if any(pat[i][i] != 0 for i in range(self.k)):
                raise ValueError("pattern diagonal must be zero")
            if any(x not in (-1, 0, 1) for r in pat for x in r):
                raise ValueError("pattern entries must be in {-1, 0, 1}")
            if not _support_connected(pat):
                raise ValueError("pattern support must be connected")
        if self.colors is not None and len(self.colors) != self.k:
            raise ValueError("colors must give one color per node position")

    @property
    def pattern(self):
        return self.variants[0]

    @property
    def signed(self):
        return any(x < 0 for v in self.variants for r in v for x in r)

    @property
    def simple(self):
        """All node positions anchored."""
        return len(self.anchors) == self.k


def _triad(edges):
    """3-node pattern from directed position pairs (1-based)."""
    pat = [[0] * 3 for _ in range(3)]
    for i, j in edges:
        pat[i - 1][j - 1] = 1
    return [pat]


_TRIAD_EDGES = {
    "M1": [(1, 2), (2, 3), (3, 1)],
    "M2": [(1, 2), (2, 1), (2, 3), (3, 1)],
    "M3": [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3)],
    "M4": [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)],
    "M5": [(1, 2), (1, 3), (2, 3)],
    "M6": [(1, 2), (2, 1), (3, 1), (3, 2)],
    "M7": [(1, 2), (2, 1), (1, 3), (2, 3)],
    "M8": [(1, 2), (1, 3)],
    "M9": [(1, 2), (3, 1)],
    "M10": [(2, 1), (3, 1)],
    "M11": [(1, 2), (2, 1), (1, 3)],
    "M12": [(1, 2), (2, 1), (3, 1)],
    "M13": [(1, 2), (2, 1), (1, 3), (3, 1)],
}

TRIANGULAR_TRIADS = ("M1", "M2", "M3", "M4", "M5", "M6", "M7")
WEDGE_TRIADS = ("M8", "M9", "M10", "M11", "M12", "M13")

# Coherent feedforward loop: same edge pattern, four admissible sign
# combinations (product of signs along the two paths agrees).
_CFFL_SIGNS = [(1, 1, 1), (-1, -1, 1), (1, -1, -1), (-1, 1, -1)]


def _cffl_variants():
    variants = []
    for s12, s13, s23 in _CFFL_SIGNS:
        variants.append([[0, s12, s13], [0, 0, s23], [0, 0, 0]])
    return tuple(variants)


def _clique_pattern(k):
    return [[1 if i != j else 0 for j in range(k)] for i in range(k)]


def available_motifs():
    names = list(TRIANGULAR_TRIADS) + list(WEDGE_TRIADS)
    names += ["Medge", "bifan", "semiclique", "coherent-ffl"]
    names += [f"clique{k}" for k in range(3, 10)]
    return names


def named_motif(name):
    """Look up a motif spec by canonical name (case-insensitive)."""
    key = name.strip().lower().replace("_", "").replace("-", "")
    if key in {f"m{i}" for i in range(1, 14)}:
        canon = "M" + key[1:]
        return MotifSpec(3, _triad(_TRIAD_EDGES[canon]),
                         frozenset(range(3)), name=canon)
    if key == "medge":
        one_way = [[0, 1], [0, 0]]
        reciprocal = [[0, 1], [1, 0]]
        return MotifSpec(2, (one_way, reciprocal), frozenset({0, 1}),
                         name="Medge")
    if key == "bifan":
        pat = [[0] * 4 for _ in range(4)]
        for i, j in [(1, 3), (1, 4), (2, 3), (2, 4)]:
            pat[i - 1][j - 1] = 1
        return MotifSpec(4, (pat,), frozenset(range(4)), name="bifan")
    if key == "semiclique":
        pat = _clique_pattern(4)
        pat[2][3] = pat[3][2] = 0
        return MotifSpec(4, (pat,), frozenset(range(4)), name="semiclique")
    if key in ("coherentffl", "cffl"):
        return MotifSpec(3, _cffl_variants(), frozenset(range(3)),
                         name="coherent-ffl")
    if key.startswith("clique") and key[6:].isdigit():
        k = int(key[6:])
        if 3 <= k <= 9:
            return MotifSpec(k, (_clique_pattern(k),), frozenset(range(k)),
                             name=f"clique{k}")
    raise UnknownMotifError(
        f"unknown motif {name!r}; available: {', '.join(available_motifs())}")


def parse_motif_literal(text):
    """Parse a custom motif pattern.

    Format: k lines of k characters from {0, 1, +, -} (row i, column j
    nonzero means edge i -> j with optional sign), optionally followed by an
    anchor line like ``anchors: 1,3`` (1-based; default anchors all nodes).
    """
    rows = []
    anchors = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().startswith("anchors:"):
            try:
                anchors = frozenset(
                    int(t) - 1 for t in line.split(":", 1)[1].split(","))
            except ValueError:
                raise ParseError("bad anchor list", line=lineno) from None
            continue
        row = []
        for ch in line:
            if ch in " \t":
                continue
            if ch == "0":
                row.append(0)
            elif ch in ("1", "+"):
                row.append(1)
            elif ch == "-":
                row.append(-1)
            else:
                raise ParseError(f"bad pattern char {ch!r}", line=lineno)
        rows.append(row)
    k = len(rows)
    if k < 2 or any(len(r) != k for r in rows):
        raise ParseError("pattern must be a k x k block, k >= 2")
    if anchors is None:
        anchors = frozenset(range(k))
    try:
        return MotifSpec(k, (rows,), anchors, name="custom")
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def resolve_motif(name_or_path):
    """Named motif, or a custom pattern file if the argument is a path."""
    import os

    if os.path.isfile(name_or_path):
        with open(name_or_path, encoding="utf-8") as fh:
            return parse_motif_literal(fh.read())
    return named_motif(name_or_path)
