"""Recognition of digraph classes defined by forbidden path orientations.

Each pattern is an orientation of the four-vertex path v1 - v2 - v3 - v4
that always contains the central arc v2 -> v3.  The four orientations are
named by where the end vertices attach:

    in_in    v1 -> v2,  v2 -> v3,  v4 -> v3
    out_out  v2 -> v1,  v2 -> v3,  v3 -> v4
    in_out   v1 -> v2,  v2 -> v3,  v3 -> v4   (the directed path)
    out_in   v2 -> v1,  v2 -> v3,  v4 -> v3

A digraph is "free" of a pattern when every occurrence on four distinct
vertices has v1 and v4 adjacent.  Freeness of each orientation characterises
a class:

    in_in    arc-locally in-semicomplete
    out_out  arc-locally out-semicomplete
    in_out   3-quasi-transitive
    out_in   3-anti-quasi-transitive

The separate anti_circulant condition asks that whenever the arcs
x1 -> x2, x3 -> x2, x3 -> x4 exist on distinct vertices, the closing arc
x4 -> x1 exists too.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph

PATH_PATTERNS = ("in_in", "out_out", "in_out", "out_in")

# Arcs of each pattern as index pairs into the witness tuple (v1, v2, v3, v4).
PATTERN_ARCS = {
    "in_in": ((0, 1), (1, 2), (3, 2)),
    "out_out": ((1, 0), (1, 2), (2, 3)),
    "in_out": ((0, 1), (1, 2), (2, 3)),
    "out_in": ((1, 0), (1, 2), (3, 2)),
    "anti_circulant": ((0, 1), (2, 1), (2, 3)),
}

# Whether v1 is an out-neighbour of v2 and v4 an out-neighbour of v3.
_SIDES = {
    "in_in": (False, False),
    "out_out": (True, True),
    "in_out": (False, True),
    "out_in": (True, False),
}


@dataclass(frozen=True)
class PatternWitness:
    """Four distinct vertices realising a pattern violation.

    For the path patterns the three pattern arcs are present and v1, v4 are
    non-adjacent.  For anti_circulant the three defining arcs are present
    and the closing arc v4 -> v1 is absent.
    """

    pattern: str
    vertices: tuple[int, int, int, int]

    def record(self) -> str:
        """Compact text form: pattern name followed by the four labels."""
        return " ".join([self.pattern, *map(str, self.vertices)])


def find_pattern_violation(d: Digraph, pattern: str) -> PatternWitness | None:
    """First violation of a path pattern in deterministic scan order.

    Scans arcs (v2, v3) lexicographically, then v1 ascending, then v4
    ascending, so the returned witness is the least violating tuple in
    (v2, v3, v1, v4) order.  Returns None when the digraph is free of the
    pattern.
    """
    try:
        v1_out, v4_out = _SIDES[pattern]
    except KeyError:
        raise ValueError(f"unknown path pattern {pattern!r}") from None
    out = d.out_masks
    inn = d.in_masks
    adj = d.adj_masks
    for v2 in range(d.n):
        m = out[v2]
        while m:
            b = m & -m
            v3 = b.bit_length() - 1
            m ^= b
            pool1 = (out[v2] if v1_out else inn[v2]) & ~b
            if not pool1:
                continue
            pool4 = (out[v3] if v4_out else inn[v3]) & ~(1 << v2)
            if not pool4:
                continue
            mm = pool1
            while mm:
                bb = mm & -mm
                v1 = bb.bit_length() - 1
                mm ^= bb
                cand = pool4 & ~adj[v1] & ~bb
                if cand:
                    v4 = (cand & -cand).bit_length() - 1
                    return PatternWitness(pattern, (v1, v2, v3, v4))
    return None


def find_anti_circulant_violation(d: Digraph) -> PatternWitness | None:
    """First (x1, x2, x3, x4) with the closing arc x4 -> x1 missing, or None."""
    out = d.out_masks
    inn = d.in_masks
    for x1 in range(d.n):
        m = out[x1]
        while m:
            b = m & -m
            x2 = b.bit_length() - 1
            m ^= b
            pool3 = inn[x2] & ~(1 << x1)
            mm = pool3
            while mm:
                bb = mm & -mm
                x3 = bb.bit_length() - 1
                mm ^= bb
                cand = out[x3] & ~(1 << x1) & ~b & ~inn[x1]
                if cand:
                    x4 = (cand & -cand).bit_length() - 1
                    return PatternWitness("anti_circulant", (x1, x2, x3, x4))
    return None


def witness_is_valid(d: Digraph, w: PatternWitness) -> bool:
    """Replay a witness against its digraph."""
    v = w.vertices
    if len(set(v)) != 4 or not all(0 <= x < d.n for x in v):
        return False
    if w.pattern == "anti_circulant":
        x1, x2, x3, x4 = v
        return (
            d.dominates(x1, x2)
            and d.dominates(x3, x2)
            and d.dominates(x3, x4)
            and not d.dominates(x4, x1)
        )
    if w.pattern not in _SIDES:
        return False
    arcs_ok = all(d.dominates(v[a], v[b]) for a, b in PATTERN_ARCS[w.pattern])
    return arcs_ok and not d.adjacent(v[0], v[3])


def is_arc_locally_in_semicomplete(d: Digraph) -> bool:
    """In-neighbours of the ends of any arc are pairwise adjacent."""
    return find_pattern_violation(d, "in_in") is None


def is_arc_locally_out_semicomplete(d: Digraph) -> bool:
    """Out-neighbours of the ends of any arc are pairwise adjacent."""
    return find_pattern_violation(d, "out_out") is None


def is_arc_locally_semicomplete(d: Digraph) -> bool:
    """Both the in_in and the out_out condition hold."""
    return (
        find_pattern_violation(d, "in_in") is None
        and find_pattern_violation(d, "out_out") is None
    )


def is_3_quasi_transitive(d: Digraph) -> bool:
    """Ends of any directed path on four vertices are adjacent."""
    return find_pattern_violation(d, "in_out") is None


def is_3_anti_quasi_transitive(d: Digraph) -> bool:
    return find_pattern_violation(d, "out_in") is None


def is_3_anti_circulant(d: Digraph) -> bool:
    return find_anti_circulant_violation(d) is None


@dataclass(frozen=True)
class ClassReport:
    """Membership flags for one digraph, with witnesses for failed flags.

    ``witnesses`` is keyed by flag name and only holds entries for flags
    that are False and have a witness type (the pattern-defined classes).
    """

    arc_locally_in_semicomplete: bool
    arc_locally_out_semicomplete: bool
    arc_locally_semicomplete: bool
    three_quasi_transitive: bool
    three_anti_quasi_transitive: bool
    three_anti_circulant: bool
    semicomplete: bool
    semicomplete_bipartite: bool
    bipartite: bool
    witnesses: dict[str, PatternWitness]

    FLAG_NAMES = (
        "arc_locally_in_semicomplete",
        "arc_locally_out_semicomplete",
        "arc_locally_semicomplete",
        "three_quasi_transitive",
        "three_anti_quasi_transitive",
        "three_anti_circulant",
        "semicomplete",
        "semicomplete_bipartite",
        "bipartite",
    )

    def flag(self, name: str) -> bool:
        if name not in self.FLAG_NAMES:
            raise ValueError(f"unknown class flag {name!r}")
        return getattr(self, name)


def classify(d: Digraph) -> ClassReport:
    """Evaluate every class flag on one digraph."""
    w_in = find_pattern_violation(d, "in_in")
    w_out = find_pattern_violation(d, "out_out")
    w_qt = find_pattern_violation(d, "in_out")
    w_aqt = find_pattern_violation(d, "out_in")
    w_ac = find_anti_circulant_violation(d)
    witnesses = {}
    if w_in is not None:
        witnesses["arc_locally_in_semicomplete"] = w_in
    if w_out is not None:
        witnesses["arc_locally_out_semicomplete"] = w_out
    if w_in is not None or w_out is not None:
        witnesses["arc_locally_semicomplete"] = w_in if w_in is not None else w_out
    if w_qt is not None:
        witnesses["three_quasi_transitive"] = w_qt
    if w_aqt is not None:
        witnesses["three_anti_quasi_transitive"] = w_aqt
    if w_ac is not None:
        witnesses["three_anti_circulant"] = w_ac
    return ClassReport(
        arc_locally_in_semicomplete=w_in is None,
        arc_locally_out_semicomplete=w_out is None,
        arc_locally_semicomplete=w_in is None and w_out is None,
        three_quasi_transitive=w_qt is None,
        three_anti_quasi_transitive=w_aqt is None,
        three_anti_circulant=w_ac is None,
        semicomplete=d.is_semicomplete(),
        semicomplete_bipartite=d.is_semicomplete_bipartite(),
        bipartite=d.bipartition() is not None,
        witnesses=witnesses,
    )
