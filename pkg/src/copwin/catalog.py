"""Named graphs and the fixture corpus.

Corpus files are small ``key = value`` documents, one graph per file::

    # comment
    name = h7
    vector = (2,2,2,1)
    r = 1
    source = figure for (2,2,2,1)
    edges = (1,2) (1,3) ...

Labels run over ``1..sum(vector)``. Two optional keys are understood:
``ranks`` (the rank printed on each vertex, in label order) and ``group``
(fixtures that together should list every realizer of their vector). ``r`` may
also be ``any`` for catalogue members whose top-heaviness is not declared.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import GraphParseError
from .graph import Graph, parse_graph
from .infinity import INFINITY
from .rank import corner_rank, rank_cardinality_vector, top_heaviness
from .vectors import RankVector, parse_vector

__all__ = [
    "Fixture",
    "load_corpus",
    "bundled_corpus",
    "check_fixture",
    "check_groups",
    "named_graph",
    "list_named",
    "H7_EDGES",
]

_KEYS = {"name", "vector", "r", "source", "edges", "group", "ranks"}
_REQUIRED = ("name", "vector", "r", "source", "edges")


@dataclass(frozen=True)
class Fixture:
    name: str
    declared_vector: RankVector
    declared_r: int | None  # None when the file says ``any``
    graph: Graph
    source: str
    group: str | None = None
    ranks: tuple[int, ...] | None = None
    path: str | None = None


def parse_fixture(text: str, source: str = "<string>") -> Fixture:
    fields = {}
    lines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise GraphParseError("expected 'key = value'", lineno, 1, source)
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _KEYS:
            raise GraphParseError(f"unknown key {key!r}", lineno, 1, source)
        if key in fields:
            raise GraphParseError(f"duplicate key {key!r}", lineno, 1, source)
        fields[key] = value
        lines[key] = lineno
    for key in _REQUIRED:
        if key not in fields:
            raise GraphParseError(f"missing key {key!r}", None, None, source)
    try:
        vector = parse_vector(fields["vector"])
    except ValueError as e:
        raise GraphParseError(str(e), lines["vector"], 1, source) from None
    r_text = fields["r"].lower()
    if r_text not in ("0", "1", "any"):
        raise GraphParseError("r must be 0, 1 or any", lines["r"], 1, source)
    n = vector.total
    try:
        g = parse_graph(fields["edges"], format="pairs", n=n)
    except GraphParseError as e:
        # re-anchor to the edges line of this file
        raise GraphParseError(str(e).split(": ", 1)[-1], lines["edges"], e.column, source) from None
    ranks = None
    if "ranks" in fields:
        try:
            ranks = tuple(int(t) for t in fields["ranks"].split())
        except ValueError:
            raise GraphParseError("ranks must be integers", lines["ranks"], 1, source) from None
        if len(ranks) != n:
            raise GraphParseError(f"{len(ranks)} ranks for {n} vertices", lines["ranks"], 1, source)
    return Fixture(
        name=fields["name"],
        declared_vector=vector,
        declared_r=None if r_text == "any" else int(r_text),
        graph=g,
        source=fields["source"],
        group=fields.get("group"),
        ranks=ranks,
        path=source,
    )


def load_corpus(path) -> list[Fixture]:
    """Every fixture in a directory, sorted by name; names must be unique."""
    path = Path(path)
    if not path.is_dir():
        raise FileNotFoundError(f"corpus directory not found: {path}")
    out = {}
    for entry in sorted(path.iterdir()):
        if entry.name.startswith(".") or not entry.is_file():
            continue
        fx = parse_fixture(entry.read_text(encoding="utf-8"), str(entry))
        if fx.name in out:
            raise GraphParseError(f"duplicate fixture name {fx.name!r}", None, None, str(entry))
        out[fx.name] = fx
    return [out[k] for k in sorted(out)]


def bundled_corpus_path() -> Path:
    return Path(str(resources.files("copwin") / "corpus"))


_BUNDLED = None


def bundled_corpus() -> list[Fixture]:
    global _BUNDLED
    if _BUNDLED is None:
        _BUNDLED = load_corpus(bundled_corpus_path())
    return list(_BUNDLED)


def default_corpus_path() -> Path:
    env = os.environ.get("COPWIN_CORPUS")
    return Path(env) if env else bundled_corpus_path()


def check_fixture(fx: Fixture) -> list[str]:
    """Mismatches between a fixture's declarations and its computed ranking."""
    g = fx.graph
    r = corner_rank(g)
    if r.alpha is INFINITY:
        return ["graph is not cop-win"]
    problems = []
    vec = rank_cardinality_vector(r)
    if vec != fx.declared_vector:
        problems.append(f"vector {vec} != declared {fx.declared_vector}")
    if fx.declared_r is not None:
        top = top_heaviness(g, r)
        if top.r != fx.declared_r:
            problems.append(f"top-heaviness {top} != declared r={fx.declared_r}")
    if fx.ranks is not None and tuple(r.ranks) != fx.ranks:
        bad = [g.labels[v] for v in range(g.n) if r.ranks[v] != fx.ranks[v]]
        problems.append(f"printed ranks differ at labels {bad}")
    return problems


def check_groups(fixtures, cap: int = 9) -> dict[str, list[str]]:
    """For each group, compare its members with the census of the group's vector."""
    from .canon import canonical_form
    from .search import census

    groups = {}
    for fx in fixtures:
        if fx.group:
            groups.setdefault(fx.group, []).append(fx)
    report = {}
    for name, members in sorted(groups.items()):
        vec = members[0].declared_vector
        rs = {fx.declared_r for fx in members}
        problems = []
        if len({fx.declared_vector for fx in members}) != 1 or len(rs) != 1:
            problems.append("members disagree on vector or r")
        filt = "any" if None in rs else f"top{rs.pop()}"
        expected = set(census(vec, filt, cap=cap).forms)
        drawn = [canonical_form(fx.graph) for fx in members]
        if len(set(drawn)) != len(drawn):
            problems.append("two members are isomorphic")
        missing = len(expected - set(drawn))
        extra = [fx.name for fx, f in zip(members, drawn) if f not in expected]
        if missing:
            problems.append(f"{missing} realizer(s) not drawn (census has {len(expected)})")
        if extra:
            problems.append(f"not realizers: {extra}")
        report[name] = problems
    return report


# -- named graphs --------------------------------------------------------------

H7_LABELS = ("a1", "a2", "b1", "b2", "c1", "c2", "d")
H7_EDGES = (
    ("a1", "a2"), ("b1", "c1"), ("b1", "c2"), ("b2", "c1"), ("b2", "c2"), ("c1", "d"), ("c2", "d"),
    ("a1", "b2"), ("a1", "b1"), ("a2", "b2"), ("a2", "b1"), ("a2", "c1"), ("a1", "c2"), ("b1", "d"),
)
FIG2_LABELS = ("v1", "v2", "v3", "v4", "v5", "y", "x")
FIG2_EDGES = (("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v5", "v1"), ("v1", "y"), ("y", "x"))


def _labelled(labels, edges):
    idx = {x: i for i, x in enumerate(labels)}
    return Graph.from_edges(len(labels), [(idx[a], idx[b]) for a, b in edges], labels=labels)


def _path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _clique(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _cycle(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


_FAMILIES = {"P": _path, "K": _clique, "C": _cycle}
_FIXED = {
    "H7": lambda: _labelled(H7_LABELS, H7_EDGES),
    "fig2": lambda: _labelled(FIG2_LABELS, FIG2_EDGES),
}


def list_named() -> list[str]:
    return sorted(_FAMILIES) + sorted(_FIXED) + [fx.name.replace("_", "-") for fx in bundled_corpus()]


def named_graph(name: str, n: int | None = None) -> Graph:
    """``P``, ``K`` and ``C`` take ``n``; ``H7``, ``fig2`` and every bundled
    fixture name (``-`` and ``_`` interchangeable) take no parameter."""
    if name in _FAMILIES or name.upper() in _FAMILIES and len(name) == 1:
        if n is None or n < 1:
            raise ValueError(f"{name} needs a positive vertex count n")
        return _FAMILIES[name.upper()](n)
    if n is not None:
        raise ValueError(f"{name} takes no vertex count")
    for key, make in _FIXED.items():
        if key.lower() == name.lower():
            return make()
    want = name.replace("-", "_").lower()
    for fx in bundled_corpus():
        if fx.name.lower() == want:
            return fx.graph
    raise KeyError(f"unknown graph name {name!r}")
