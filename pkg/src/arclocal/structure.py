"""Structural primitives: strong components, extended cycles, cycle searches.

Length conventions: a cycle's length is its number of vertices, a path's
length is its number of arcs.  "Odd cycle of length at least five" therefore
means at least five vertices.

An extended cycle is a digraph whose vertex set splits into k >= 3 disjoint
non-empty stable parts X1, .., Xk such that the arc set is exactly the union
of the complete arc sets Xi x Xi+1 (indices mod k).  Certificates list the
parts starting from the part containing the smallest vertex and proceed in
domination direction, so equal extended cycles yield equal certificates.

The subset searches near the bottom are exponential and refuse to run above
a configurable cap (default 12 vertices) by raising CapExceeded.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .digraph import Digraph, UndirectedGraph, bits, mask_of
from .errors import CapExceeded
from .patterns import find_pattern_violation

DEFAULT_ORACLE_CAP = 12


def resolve_cap(cap: int | None) -> int:
    return DEFAULT_ORACLE_CAP if cap is None else cap


# ----------------------------------------------------------------------
# strong components
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class StrongDecomposition:
    """Strong components in topological order plus the condensation.

    ``components[i]`` is a sorted vertex tuple; arcs of the condensation only
    go from lower to higher component index.  ``component_of[v]`` is the
    index of the component containing v.
    """

    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    condensation: Digraph

    def component_mask(self, i: int) -> int:
        return mask_of(self.components[i])

    def is_trivial(self, i: int) -> bool:
        return len(self.components[i]) == 1

    def initial_components(self) -> tuple[int, ...]:
        """Components no outside vertex dominates into."""
        k = self.condensation.n
        return tuple(i for i in range(k) if self.condensation.in_masks[i] == 0)

    def components_reaching(self, q: int) -> frozenset[int]:
        """Indices of components with a path to component q, excluding q."""
        return self._reach(q, self.condensation.in_masks)

    def components_reached_from(self, q: int) -> frozenset[int]:
        """Indices of components reachable from component q, excluding q."""
        return self._reach(q, self.condensation.out_masks)

    def _reach(self, q: int, masks) -> frozenset[int]:
        if not (0 <= q < self.condensation.n):
            raise ValueError(f"component index {q} out of range")
        seen = 1 << q
        frontier = seen
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= masks[v]
            frontier = reach & ~seen
            seen |= frontier
        return frozenset(bits(seen & ~(1 << q)))


def strong_components(d: Digraph) -> StrongDecomposition:
    """Tarjan's algorithm, iterative so deep digraphs cannot overflow."""
    n = d.n
    out = d.out_masks
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[tuple[int, ...]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [[root, out[root]]]
        while work:
            v, rem = work[-1]
            if rem:
                b = rem & -rem
                work[-1][1] = rem ^ b
                w = b.bit_length() - 1
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append([w, out[w]])
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                work.pop()
                if work and low[v] < low[work[-1][0]]:
                    low[work[-1][0]] = low[v]
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(tuple(sorted(comp)))
    # Tarjan finishes components in reverse topological order.
    comps.reverse()
    comp_of = [0] * n
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    cond_arcs = set()
    for u in range(n):
        cu = comp_of[u]
        for v in bits(out[u]):
            cv = comp_of[v]
            if cu != cv:
                cond_arcs.add((cu, cv))
    condensation = Digraph(len(comps), sorted(cond_arcs))
    return StrongDecomposition(tuple(comps), tuple(comp_of), condensation)


# ----------------------------------------------------------------------
# extended cycles
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ExtendedCycleCertificate:
    """Parts of an extended cycle, in cyclic domination order.

    Each part is a sorted vertex tuple; ``parts[0]`` contains the smallest
    vertex of the union.
    """

    parts: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def part_sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for part in self.parts for v in part))

    def relabel(self, labels: tuple[int, ...]) -> "ExtendedCycleCertificate":
        """Map every vertex through ``labels`` (as returned by induced())."""
        return ExtendedCycleCertificate(
            tuple(tuple(sorted(labels[v] for v in part)) for part in self.parts)
        )


def recognize_extended_cycle(d: Digraph) -> ExtendedCycleCertificate | None:
    """Certificate iff the whole digraph is an extended cycle (k >= 3).

    Vertices of a common part share their exact out- and in-neighbour sets,
    so grouping by that signature recovers the only possible parts; a single
    cyclic walk then checks that arcs are exactly the consecutive complete
    sets.  Any digraph passing the walk satisfies the definition verbatim.
    """
    n = d.n
    if n < 3:
        return None
    out = d.out_masks
    inn = d.in_masks
    groups: dict[tuple[int, int], int] = {}
    for v in range(n):
        o = out[v]
        i = inn[v]
        if not o or not i:
            return None
        key = (o, i)
        groups[key] = groups.get(key, 0) | (1 << v)
    if len(groups) < 3:
        return None
    by_mask: dict[int, tuple[int, int]] = {}
    for (o, i), members in groups.items():
        if o & members or i & members:
            return None
        by_mask[members] = (o, i)
    start = next(m for m in by_mask if m & 1)
    k = len(by_mask)
    order: list[int] = []
    cur = start
    for _ in range(k):
        order.append(cur)
        o, _i = by_mask[cur]
        entry = by_mask.get(o)
        if entry is None or entry[1] != cur:
            return None
        cur = o
        if cur == start:
            break
    if len(order) != k or cur != start:
        return None
    return ExtendedCycleCertificate(tuple(tuple(bits(m)) for m in order))


def recognize_odd_extended_cycle(d: Digraph) -> ExtendedCycleCertificate | None:
    """Certificate iff d is an extended cycle with an odd number of parts, k >= 5."""
    cert = recognize_extended_cycle(d)
    if cert is not None and cert.k >= 5 and cert.k % 2 == 1:
        return cert
    return None


def check_extended_cycle_certificate(
    d: Digraph, parts: tuple[tuple[int, ...], ...]
) -> tuple[bool, str | None]:
    """Re-check a certificate against the definition, from scratch.

    The parts may cover a subset of d; arcs leaving the union are ignored,
    mirroring the induced subdigraph.  Returns (ok, reason).
    """
    k = len(parts)
    if k < 3:
        return False, f"certificate needs at least 3 parts, got {k}"
    masks = []
    union = 0
    for idx, part in enumerate(parts):
        if not part:
            return False, f"part {idx} is empty"
        pmask = 0
        for v in part:
            if not (0 <= v < d.n):
                return False, f"part {idx} vertex {v} out of range"
            pmask |= 1 << v
        if pmask & union:
            return False, f"part {idx} overlaps an earlier part"
        masks.append(pmask)
        union |= pmask
    for idx in range(k):
        nxt = masks[(idx + 1) % k]
        prv = masks[idx - 1]
        for v in parts[idx]:
            if d.out_masks[v] & union != nxt:
                return False, f"vertex {v} must dominate exactly part {(idx + 1) % k}"
            if d.in_masks[v] & union != prv:
                return False, f"vertex {v} must be dominated by exactly part {(idx - 1) % k}"
    return True, None


# ----------------------------------------------------------------------
# clique cuts
# ----------------------------------------------------------------------


def verify_clique_cut(d: Digraph, cut) -> bool:
    """True iff d[cut] is semicomplete and removing cut disconnects d."""
    cutset = sorted(set(cut))
    sub, _ = d.induced(cutset)
    if not sub.is_semicomplete():
        return False
    rest = [v for v in range(d.n) if v not in set(cutset)]
    if not rest:
        return False
    remainder, _ = d.induced(rest)
    return not remainder.is_connected()


# ----------------------------------------------------------------------
# cycle searches
# ----------------------------------------------------------------------


def directed_cycle_order(d: Digraph, vertices) -> tuple[int, ...] | None:
    """Cyclic order iff the induced subdigraph is exactly a directed cycle.

    Exactly one arc in and one arc out per vertex inside the set, and the
    arcs close into a single cycle; digons are 2-cycles under this reading.
    Returns the order starting from the smallest vertex, else None.
    """
    vs = sorted(set(vertices))
    if len(vs) < 2:
        return None
    smask = mask_of(vs)
    for v in vs:
        if (d.out_masks[v] & smask).bit_count() != 1:
            return None
        if (d.in_masks[v] & smask).bit_count() != 1:
            return None
    start = vs[0]
    order = [start]
    cur = start
    for _ in range(len(vs) - 1):
        cur = (d.out_masks[cur] & smask).bit_length() - 1
        if cur == start:
            return None
        order.append(cur)
    if (d.out_masks[cur] & smask) != 1 << start:
        return None
    return tuple(order)


def chordless_cycle_order(g: UndirectedGraph, vertices) -> tuple[int, ...] | None:
    """Cyclic order iff the induced subgraph is exactly one chordless cycle.

    Each vertex must have exactly two neighbours inside the set and a single
    walk must visit everything.  Returns the order starting at the smallest
    vertex toward its smaller neighbour, else None.
    """
    vs = sorted(set(vertices))
    if len(vs) < 3:
        return None
    smask = mask_of(vs)
    for v in vs:
        if (g.adj_masks[v] & smask).bit_count() != 2:
            return None
    start = vs[0]
    here = g.adj_masks[start] & smask
    first = (here & -here).bit_length() - 1
    order = [start, first]
    prev, cur = start, first
    for _ in range(len(vs) - 2):
        step = g.adj_masks[cur] & smask & ~(1 << prev)
        prev, cur = cur, step.bit_length() - 1
        if cur == start:
            return None
        order.append(cur)
    return tuple(order) if g.adj_masks[order[-1]] & (1 << start) else None


def find_induced_odd_directed_cycle_ge5(
    d: Digraph, cap: int | None = None
) -> tuple[int, ...] | None:
    """An induced directed cycle with an odd vertex count >= 5, or None.

    For arc-locally in-semicomplete digraphs the search is structural and
    has no size limit: a strong component containing such a cycle is itself
    an odd extended cycle, and one vertex per part realises the cycle.
    Other digraphs fall back to subset search, refused above the cap.
    """
    if find_pattern_violation(d, "in_in") is None:
        sd = strong_components(d)
        for comp in sd.components:
            if len(comp) < 5:
                continue
            sub, labels = d.induced(comp)
            cert = recognize_odd_extended_cycle(sub)
            if cert is not None:
                return tuple(labels[part[0]] for part in cert.parts)
        return None
    limit = resolve_cap(cap)
    if d.n > limit:
        raise CapExceeded(
            f"induced odd cycle search not computed: {d.n} vertices exceeds cap {limit}"
        )
    for size in range(5, d.n + 1, 2):
        for subset in combinations(range(d.n), size):
            order = directed_cycle_order(d, subset)
            if order is not None:
                return order
    return None


def find_induced_nonoriented_odd_cycle_ge5(
    d: Digraph, cap: int | None = None
) -> tuple[int, ...] | None:
    """A vertex set inducing an odd chordless cycle that is not directed.

    Looks for S, |S| odd and >= 5, such that the underlying graph induced on
    S is a chordless cycle while d[S] is not a directed cycle (some edge is
    a digon or some orientation goes against the rest).  Subset search only;
    refused above the cap.  Returns the cycle order in the underlying graph.
    """
    limit = resolve_cap(cap)
    if d.n > limit:
        raise CapExceeded(
            f"non-oriented odd cycle search not computed: {d.n} vertices exceeds cap {limit}"
        )
    g = d.underlying_graph()
    for size in range(5, d.n + 1, 2):
        for subset in combinations(range(d.n), size):
            order = chordless_cycle_order(g, subset)
            if order is None:
                continue
            if directed_cycle_order(d, subset) is None:
                return order
    return None
