"""Loop-free digraph values and the basic vocabulary used everywhere else.

Vertices are the integers ``0..n-1``.  An arc is an ordered pair ``(u, v)``
with ``u != v``, read as "u dominates v".  Both ``(u, v)`` and ``(v, u)`` may
be present (a digon); loops and parallel arcs cannot be represented.

Neighbourhoods are stored as integer bitmasks: bit ``v`` of ``out_masks[u]``
is set iff the arc ``(u, v)`` exists.  That keeps membership tests O(1) and
makes exhaustive sweeps over all small digraphs cheap.

Degenerate-input conventions: the empty digraph (n = 0) counts as connected,
semicomplete and bipartite, and the empty vertex set is stable.  Distances
count arcs, so ``distance(v, v) == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EdgeListError


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Digraph:
    """An immutable loop-free digraph on vertices ``0..n-1``."""

    __slots__ = ("n", "out_masks", "in_masks", "adj_masks", "full_mask")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop arc ({u}, {v}) not allowed")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self.out_masks = tuple(out)
        self.in_masks = tuple(inn)
        self.adj_masks = tuple(o | i for o, i in zip(out, inn))
        self.full_mask = (1 << n) - 1

    @classmethod
    def _from_masks(cls, n: int, out_masks, in_masks) -> "Digraph":
        """Trusted constructor: masks must describe a valid loop-free digraph."""
        d = object.__new__(cls)
        d.n = n
        d.out_masks = tuple(out_masks)
        d.in_masks = tuple(in_masks)
        d.adj_masks = tuple(o | i for o, i in zip(out_masks, in_masks))
        d.full_mask = (1 << n) - 1
        return d

    # ------------------------------------------------------------------
    # basic queries
    # ------------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} outside range 0..{self.n - 1}")

    def dominates(self, u: int, v: int) -> bool:
        """True iff the arc (u, v) is present.  Rejects u == v."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("dominates() requires two distinct vertices")
        return (self.out_masks[u] >> v) & 1 == 1

    def adjacent(self, u: int, v: int) -> bool:
        """True iff at least one of the arcs (u, v), (v, u) is present."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("adjacent() requires two distinct vertices")
        return (self.adj_masks[u] >> v) & 1 == 1

    def arcs(self) -> Iterator[tuple[int, int]]:
        """All arcs in lexicographic order."""
        for u in range(self.n):
            m = self.out_masks[u]
            while m:
                b = m & -m
                yield (u, b.bit_length() - 1)
                m ^= b

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self.out_masks)

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.out_masks[v].bit_count()

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.in_masks[v].bit_count()

    # ------------------------------------------------------------------
    # derived digraphs
    # ------------------------------------------------------------------

    def inverse(self) -> "Digraph":
        """The digraph with every arc reversed."""
        return Digraph._from_masks(self.n, self.in_masks, self.out_masks)

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", tuple[int, ...]]:
        """Induced subdigraph on ``vertices`` plus the relabelling map.

        The subdigraph lives on ``0..k-1``; the returned tuple ``labels``
        satisfies ``labels[new] == old``, with labels in increasing order.
        """
        labels = tuple(sorted(set(vertices)))
        for v in labels:
            self._check_vertex(v)
        smask = mask_of(labels)
        index = {old: new for new, old in enumerate(labels)}
        out = [0] * len(labels)
        inn = [0] * len(labels)
        for new, old in enumerate(labels):
            for w in bits(self.out_masks[old] & smask):
                out[new] |= 1 << index[w]
            for w in bits(self.in_masks[old] & smask):
                inn[new] |= 1 << index[w]
        return Digraph._from_masks(len(labels), out, inn), labels

    def underlying_graph(self) -> "UndirectedGraph":
        """Undirected graph with an edge wherever some arc exists."""
        return UndirectedGraph._from_masks(self.n, self.adj_masks)

    # ------------------------------------------------------------------
    # connectivity
    # ------------------------------------------------------------------

    def is_connected(self) -> bool:
        """True iff the underlying graph is connected (n = 0 counts)."""
        if self.n <= 1:
            return True
        adj = self.adj_masks
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            m = frontier
            while m:
                b = m & -m
                reach |= adj[b.bit_length() - 1]
                m ^= b
            frontier = reach & ~seen
            seen |= frontier
        return seen == self.full_mask

    def distance(self, u: int, v: int) -> int | None:
        """Arc count of a shortest directed path u -> v, or None."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        out = self.out_masks
        target = 1 << v
        seen = 1 << u
        frontier = seen
        dist = 0
        while frontier:
            dist += 1
            reach = 0
            m = frontier
            while m:
                b = m & -m
                reach |= out[b.bit_length() - 1]
                m ^= b
            if reach & target:
                return dist
            frontier = reach & ~seen
            seen |= frontier
        return None

    # ------------------------------------------------------------------
    # shape predicates
    # ------------------------------------------------------------------

    def is_semicomplete(self) -> bool:
        """True iff every pair of distinct vertices is adjacent."""
        full = self.full_mask
        return all(self.adj_masks[v] == full & ~(1 << v) for v in range(self.n))

    def is_stable(self, vertices: Iterable[int]) -> bool:
        """True iff no arc joins two of the given vertices."""
        vs = list(set(vertices))
        for v in vs:
            self._check_vertex(v)
        smask = mask_of(vs)
        return all(self.adj_masks[v] & smask == 0 for v in vs)

    def bipartition(self) -> tuple[int, ...] | None:
        """A proper 2-colouring of the underlying graph, or None.

        Colouring is deterministic: components are rooted at their smallest
        vertex, which gets colour 0.
        """
        colour = [-1] * self.n
        adj = self.adj_masks
        for root in range(self.n):
            if colour[root] != -1:
                continue
            colour[root] = 0
            frontier = [root]
            while frontier:
                nxt = []
                for v in frontier:
                    c = colour[v] ^ 1
                    for w in bits(adj[v]):
                        if colour[w] == -1:
                            colour[w] = c
                            nxt.append(w)
                        elif colour[w] != c:
                            return None
                frontier = nxt
        return tuple(colour)

    def is_semicomplete_bipartite(self) -> bool:
        """True iff some bipartition has every cross pair adjacent.

        Arcless digraphs qualify with one empty side.  With at least one arc
        the digraph must be connected, so the 2-colouring is forced and it
        suffices to test all cross pairs against it.
        """
        if self.arc_count == 0:
            return True
        if not self.is_connected():
            return False
        colour = self.bipartition()
        if colour is None:
            return False
        side0 = [v for v in range(self.n) if colour[v] == 0]
        side1mask = mask_of(v for v in range(self.n) if colour[v] == 1)
        return all(self.adj_masks[v] & side1mask == side1mask for v in side0)

    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out_masks == other.out_masks

    def __hash__(self) -> int:
        return hash((self.n, self.out_masks))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs())!r})"


class UndirectedGraph:
    """An immutable simple graph on vertices ``0..n-1``, bitmask adjacency."""

    __slots__ = ("n", "adj_masks", "full_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-edge ({u}, {v}) not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj_masks = tuple(adj)
        self.full_mask = (1 << n) - 1

    @classmethod
    def _from_masks(cls, n: int, adj_masks) -> "UndirectedGraph":
        g = object.__new__(cls)
        g.n = n
        g.adj_masks = tuple(adj_masks)
        g.full_mask = (1 << n) - 1
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj_masks[u] >> v) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            m = self.adj_masks[u] >> (u + 1)
            while m:
                b = m & -m
                yield (u, u + 1 + b.bit_length() - 1)
                m ^= b

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj_masks) // 2

    def degree(self, v: int) -> int:
        return self.adj_masks[v].bit_count()

    def complement(self) -> "UndirectedGraph":
        full = self.full_mask
        return UndirectedGraph._from_masks(
            self.n, tuple(full & ~self.adj_masks[v] & ~(1 << v) for v in range(self.n))
        )

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= self.adj_masks[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == self.full_mask

    def bipartition(self) -> tuple[int, ...] | None:
        colour = [-1] * self.n
        for root in range(self.n):
            if colour[root] != -1:
                continue
            colour[root] = 0
            frontier = [root]
            while frontier:
                nxt = []
                for v in frontier:
                    c = colour[v] ^ 1
                    for w in bits(self.adj_masks[v]):
                        if colour[w] == -1:
                            colour[w] = c
                            nxt.append(w)
                        elif colour[w] != c:
                            return None
                frontier = nxt
        return tuple(colour)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.adj_masks == other.adj_masks

    def __hash__(self) -> int:
        return hash((self.n, self.adj_masks))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, edges={list(self.edges())!r})"


@dataclass(frozen=True)
class SetRelation:
    """How a vertex set X relates to a disjoint vertex set Y.

    ``dominates_all``: every x in X dominates every y in Y (vacuously true
    when either side is empty).  ``no_back_arc``: no arc from Y to X.
    ``strictly_dominates`` is the conjunction of the two.
    """

    dominates_all: bool
    no_back_arc: bool

    @property
    def strictly_dominates(self) -> bool:
        return self.dominates_all and self.no_back_arc


def set_relation(d: Digraph, xs: Iterable[int], ys: Iterable[int]) -> SetRelation:
    """Compute the domination flags between two disjoint vertex sets."""
    xset = sorted(set(xs))
    yset = sorted(set(ys))
    for v in xset + yset:
        d._check_vertex(v)
    xmask = mask_of(xset)
    ymask = mask_of(yset)
    if xmask & ymask:
        raise ValueError("set_relation() requires disjoint vertex sets")
    dominates_all = all(d.out_masks[x] & ymask == ymask for x in xset)
    no_back = all(d.out_masks[y] & xmask == 0 for y in yset)
    return SetRelation(dominates_all, no_back)


# ----------------------------------------------------------------------
# edge-list text format
# ----------------------------------------------------------------------
#
# First data line: "n <count>".  Every further data line: "u v" for one arc.
# Blank lines and lines starting with '#' are ignored.


def parse_edge_list(text: str) -> Digraph:
    """Parse the edge-list format; raises EdgeListError with a line number."""
    n: int | None = None
    arcs: list[tuple[int, int]] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise EdgeListError(lineno, f"expected header 'n <count>', got {line!r}")
            try:
                n = int(fields[1])
            except ValueError:
                raise EdgeListError(lineno, f"vertex count {fields[1]!r} is not an integer") from None
            if n < 0:
                raise EdgeListError(lineno, f"vertex count must be non-negative, got {n}")
            continue
        if len(fields) != 2:
            raise EdgeListError(lineno, f"expected arc 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(lineno, f"arc endpoints {line!r} are not integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(lineno, f"arc ({u}, {v}) outside vertex range 0..{n - 1}")
        if u == v:
            raise EdgeListError(lineno, f"loop arc ({u}, {v}) not allowed")
        arcs.append((u, v))
    if n is None:
        raise EdgeListError(lineno + 1, "missing header 'n <count>'")
    return Digraph(n, arcs)


def format_edge_list(d: Digraph) -> str:
    """Serialize to the edge-list format; inverse of parse_edge_list."""
    lines = [f"n {d.n}"]
    lines.extend(f"{u} {v}" for u, v in d.arcs())
    return "\n".join(lines) + "\n"
