"""Digraph generators and brute-force oracles.

Exhaustive enumeration walks every labelled digraph on n vertices by giving
each unordered vertex pair one of four states (none, forward, backward,
digon), 4**(n*(n-1)/2) digraphs in total.  The enumeration index of a
digraph is the base-4 number whose i-th least significant digit is the state
of the i-th pair in lexicographic pair order, so failures found during a
sweep can be replayed from their index alone.

The brute-force oracles at the bottom are deliberately naive subset
searches.  They exist to check the clever implementations, so they must not
share code with them; both refuse inputs above the configurable cap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterator

from .digraph import Digraph, UndirectedGraph
from .errors import CapExceeded
from .patterns import find_pattern_violation
from .structure import (
    ExtendedCycleCertificate,
    chordless_cycle_order,
    resolve_cap,
    verify_clique_cut,
)

EXHAUSTIVE_CAP = 5

_STATE_NONE, _STATE_FWD, _STATE_BWD, _STATE_DIGON = range(4)


def vertex_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Unordered vertex pairs in the lexicographic order used for indexing."""
    return tuple(combinations(range(n), 2))


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def digraph_count(n: int) -> int:
    return 4 ** pair_count(n)


def enumerate_digraphs(n: int, connected_only: bool = False) -> Iterator[Digraph]:
    """Every labelled digraph on n vertices, in enumeration-index order."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if n > EXHAUSTIVE_CAP:
        raise CapExceeded(
            f"exhaustive enumeration not computed: n={n} exceeds cap {EXHAUSTIVE_CAP}"
        )
    if n == 0:
        yield Digraph(0)
        return
    pairs = vertex_pairs(n)
    # product() varies the last slot fastest, so put pair 0 last to make the
    # iteration order agree with ascending enumeration index.
    for states in product(range(4), repeat=len(pairs)):
        out = [0] * n
        inn = [0] * n
        for (u, v), state in zip(pairs, reversed(states)):
            if state == _STATE_NONE:
                continue
            if state != _STATE_BWD:  # forward or digon
                out[u] |= 1 << v
                inn[v] |= 1 << u
            if state >= _STATE_BWD:  # backward or digon
                out[v] |= 1 << u
                inn[u] |= 1 << v
        d = Digraph._from_masks(n, out, inn)
        if connected_only and not d.is_connected():
            continue
        yield d


def digraph_from_index(n: int, index: int) -> Digraph:
    """Rebuild the digraph with the given enumeration index."""
    total = digraph_count(n)
    if not 0 <= index < total:
        raise ValueError(f"index {index} outside 0..{total - 1} for n={n}")
    out = [0] * n
    inn = [0] * n
    for u, v in vertex_pairs(n):
        index, state = divmod(index, 4)
        if state == _STATE_NONE:
            continue
        if state != _STATE_BWD:
            out[u] |= 1 << v
            inn[v] |= 1 << u
        if state >= _STATE_BWD:
            out[v] |= 1 << u
            inn[u] |= 1 << v
    return Digraph._from_masks(n, out, inn)


def digraph_index(d: Digraph) -> int:
    """Enumeration index of a digraph; inverse of digraph_from_index."""
    index = 0
    for i, (u, v) in enumerate(vertex_pairs(d.n)):
        fwd = (d.out_masks[u] >> v) & 1
        bwd = (d.out_masks[v] >> u) & 1
        if fwd and bwd:
            state = _STATE_DIGON
        elif bwd:
            state = _STATE_BWD
        else:
            state = _STATE_FWD if fwd else _STATE_NONE
        index += state * 4**i
    return index


# ----------------------------------------------------------------------
# constructors
# ----------------------------------------------------------------------


def make_extended_cycle(sizes) -> tuple[Digraph, ExtendedCycleCertificate]:
    """Extended cycle with the given part sizes, parts labelled consecutively.

    Needs at least three parts, each of positive size.  Vertex 0 lands in
    the first part, so the certificate is already canonical.
    """
    sizes = tuple(sizes)
    if len(sizes) < 3:
        raise ValueError(f"an extended cycle needs at least 3 parts, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be positive, got {sizes}")
    parts = []
    start = 0
    for s in sizes:
        parts.append(tuple(range(start, start + s)))
        start += s
    arcs = []
    k = len(sizes)
    for i in range(k):
        for u in parts[i]:
            for v in parts[(i + 1) % k]:
                arcs.append((u, v))
    return Digraph(start, arcs), ExtendedCycleCertificate(tuple(parts))


def compose(template: Digraph, slots) -> Digraph:
    """Substitute a digraph into every vertex of a template.

    Vertex i of the template is replaced by ``slots[i]``; arcs inside each
    slot are kept and every template arc (i, j) becomes the complete arc set
    from slot i to slot j.  Substituting into a single vertex returns the
    slot unchanged.
    """
    slots = list(slots)
    if len(slots) != template.n:
        raise ValueError(
            f"template has {template.n} vertices but {len(slots)} slots were given"
        )
    offsets = []
    total = 0
    for s in slots:
        offsets.append(total)
        total += s.n
    arcs = []
    for i, s in enumerate(slots):
        base = offsets[i]
        arcs.extend((base + u, base + v) for u, v in s.arcs())
    for i, j in template.arcs():
        for u in range(slots[i].n):
            for v in range(slots[j].n):
                arcs.append((offsets[i] + u, offsets[j] + v))
    return Digraph(total, arcs)


def make_extension(template: Digraph, sizes) -> Digraph:
    """Compose with arcless slots of the given sizes (an "extension")."""
    sizes = tuple(sizes)
    if len(sizes) != template.n:
        raise ValueError(
            f"template has {template.n} vertices but {len(sizes)} sizes were given"
        )
    if any(s < 1 for s in sizes):
        raise ValueError(f"slot sizes must be positive, got {sizes}")
    return compose(template, [Digraph(s) for s in sizes])


def directed_cycle(k: int) -> Digraph:
    """The directed cycle on k >= 2 vertices."""
    if k < 2:
        raise ValueError(f"a directed cycle needs at least 2 vertices, got {k}")
    return Digraph(k, [(i, (i + 1) % k) for i in range(k)])


def directed_path(k: int) -> Digraph:
    """The directed path on k >= 1 vertices."""
    if k < 1:
        raise ValueError(f"a directed path needs at least 1 vertex, got {k}")
    return Digraph(k, [(i, i + 1) for i in range(k - 1)])


# ----------------------------------------------------------------------
# random models
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class RandomModel:
    """Seeded random digraph model.

    Per unordered pair: with probability ``p_digon`` both arcs are placed;
    otherwise each direction independently appears with probability
    ``p_arc``.  Identical seeds reproduce identical digraphs.
    """

    n: int
    p_arc: float = 0.25
    p_digon: float = 0.1
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        for name in ("p_arc", "p_digon"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")


def random_digraph(model: RandomModel) -> Digraph:
    rng = random.Random(model.seed)
    return _sample(rng, model.n, model.p_arc, model.p_digon)


def _sample(rng: random.Random, n: int, p_arc: float, p_digon: float) -> Digraph:
    arcs = []
    for u, v in combinations(range(n), 2):
        if rng.random() < p_digon:
            arcs.append((u, v))
            arcs.append((v, u))
            continue
        if rng.random() < p_arc:
            arcs.append((u, v))
        if rng.random() < p_arc:
            arcs.append((v, u))
    return Digraph(n, arcs)


def _in_class(d: Digraph, cls: str) -> bool:
    if cls in ("in", "als") and find_pattern_violation(d, "in_in") is not None:
        return False
    if cls in ("out", "als") and find_pattern_violation(d, "out_out") is not None:
        return False
    return True


def _random_semicomplete(rng: random.Random, n: int) -> Digraph:
    arcs = []
    for u, v in combinations(range(n), 2):
        r = rng.random()
        if r < 0.25:
            arcs.append((u, v))
            arcs.append((v, u))
        elif rng.random() < 0.5:
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    return Digraph(n, arcs)


def _random_semicomplete_bipartite(rng: random.Random, n: int) -> Digraph:
    left = rng.randint(1, n - 1)
    arcs = []
    for u in range(left):
        for v in range(left, n):
            r = rng.random()
            if r < 0.25:
                arcs.append((u, v))
                arcs.append((v, u))
            elif rng.random() < 0.5:
                arcs.append((u, v))
            else:
                arcs.append((v, u))
    return Digraph(n, arcs)


def _random_composition(rng: random.Random, total: int, parts: int) -> list[int]:
    """Split ``total`` into ``parts`` positive summands, uniformly at random."""
    cuts = sorted(rng.sample(range(1, total), parts - 1)) if parts > 1 else []
    bounds = [0, *cuts, total]
    return [bounds[i + 1] - bounds[i] for i in range(parts)]


def _random_extended_cycle(
    rng: random.Random, n: int, odd_ge5: bool
) -> tuple[Digraph, ExtendedCycleCertificate]:
    if odd_ge5:
        choices = [k for k in range(5, n + 1, 2)]
    else:
        choices = [k for k in range(3, n + 1)]
    k = rng.choice(choices)
    sizes = _random_composition(rng, n, k)
    return make_extended_cycle(sizes)


def _random_path_extension(rng: random.Random, n: int) -> Digraph:
    layers = rng.randint(2, n)
    sizes = _random_composition(rng, n, layers)
    return make_extension(directed_path(layers), sizes)


def _random_dominating_front(rng: random.Random, n: int) -> Digraph:
    """A semicomplete front strictly dominating an odd extended cycle."""
    front = rng.randint(1, max(1, n - 5))
    rest = n - front
    cycle, _ = _random_extended_cycle(rng, rest, odd_ge5=True)
    head = _random_semicomplete(rng, front)
    arcs = list(head.arcs())
    arcs.extend((front + u, front + v) for u, v in cycle.arcs())
    for u in range(front):
        for v in range(front, n):
            arcs.append((u, v))
    return Digraph(n, arcs)


def _random_cycle_with_tail(rng: random.Random, n: int) -> Digraph:
    """An odd extended cycle feeding a directed path out of one part."""
    tail = rng.randint(1, max(1, n - 5))
    body = n - tail
    cycle, cert = _random_extended_cycle(rng, body, odd_ge5=True)
    part = list(rng.choice(cert.parts))
    arcs = list(cycle.arcs())
    for u in part:
        arcs.append((u, body))
    for i in range(body, n - 1):
        arcs.append((i, i + 1))
    return Digraph(n, arcs)


def _random_front_with_spill(rng: random.Random, n: int) -> Digraph:
    """Semicomplete front dominating a cycle and some extra isolated targets.

    The extra targets hang off the front only, so the front is a clique cut.
    """
    spill = rng.randint(1, max(1, n - 6))
    front = rng.randint(1, max(1, n - spill - 5))
    body = n - front - spill
    cycle, _ = _random_extended_cycle(rng, body, odd_ge5=True)
    head = _random_semicomplete(rng, front)
    arcs = list(head.arcs())
    arcs.extend((front + u, front + v) for u, v in cycle.arcs())
    for u in range(front):
        for v in range(front, front + body):
            arcs.append((u, v))
    for v in range(front + body, n):
        feeders = rng.sample(range(front), rng.randint(1, front))
        arcs.extend((u, v) for u in feeders)
    return Digraph(n, arcs)


def random_class_member(
    model: RandomModel, cls: str, max_tries: int = 64
) -> Digraph | None:
    """A connected member of the requested class, or None after max_tries.

    ``cls`` is "in", "out" or "als".  Candidates come from a mix of sparse
    rejection sampling and always-in-class constructions (semicomplete,
    semicomplete bipartite, extended cycles, layered path extensions, and
    for the one-sided classes the theorem-shaped assemblies); every
    candidate is re-checked with the recognizer before being returned.
    """
    if cls not in ("in", "out", "als"):
        raise ValueError(f"unknown class {cls!r}")
    n = model.n
    rng = random.Random(model.seed)
    builders: list[Callable[[], Digraph]] = []
    if n >= 2:
        builders.append(lambda: _random_semicomplete(rng, n))
        builders.append(lambda: _random_semicomplete_bipartite(rng, n))
        builders.append(lambda: _random_path_extension(rng, n))
    if n >= 3:
        builders.append(lambda: _random_extended_cycle(rng, n, odd_ge5=False)[0])
    if n >= 5:
        builders.append(lambda: _random_extended_cycle(rng, n, odd_ge5=True)[0])
    if cls in ("in", "out") and n >= 6:
        builders.append(lambda: _random_dominating_front(rng, n))
        builders.append(lambda: _random_cycle_with_tail(rng, n))
    if cls in ("in", "out") and n >= 7:
        builders.append(lambda: _random_front_with_spill(rng, n))
    for attempt in range(max_tries):
        if builders and attempt % 3 != 0:
            candidate = rng.choice(builders)()
        else:
            candidate = _sample(rng, n, min(0.5, 1.5 / max(n, 1)), 0.05)
        if cls == "out":
            candidate = candidate.inverse()
        if candidate.is_connected() and _in_class(candidate, cls):
            return candidate
    return None


# ----------------------------------------------------------------------
# brute-force oracles
# ----------------------------------------------------------------------


def brute_force_is_perfect(
    g: UndirectedGraph, cap: int | None = None
) -> tuple[bool, tuple[str, tuple[int, ...]] | None]:
    """Perfection via the strong perfect graph theorem, by subset search.

    A graph is perfect iff neither it nor its complement contains an induced
    odd cycle on >= 5 vertices.  Returns (True, None) or (False, witness)
    where the witness is ("hole" | "antihole", cycle order).  Refuses graphs
    above the cap.
    """
    limit = resolve_cap(cap)
    if g.n > limit:
        raise CapExceeded(
            f"perfection oracle not computed: {g.n} vertices exceeds cap {limit}"
        )
    gc = g.complement()
    for size in range(5, g.n + 1, 2):
        for subset in combinations(range(g.n), size):
            order = chordless_cycle_order(g, subset)
            if order is not None:
                return False, ("hole", order)
        for subset in combinations(range(g.n), size):
            order = chordless_cycle_order(gc, subset)
            if order is not None:
                return False, ("antihole", order)
    return True, None


def brute_force_has_clique_cut(
    d: Digraph, cap: int | None = None
) -> tuple[int, ...] | None:
    """First clique cut in subset-size order, or None.  Capped."""
    limit = resolve_cap(cap)
    if d.n > limit:
        raise CapExceeded(
            f"clique cut search not computed: {d.n} vertices exceeds cap {limit}"
        )
    for size in range(0, max(0, d.n - 1)):
        for subset in combinations(range(d.n), size):
            if verify_clique_cut(d, subset):
                return subset
    return None
