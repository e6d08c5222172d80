"""Exhaustive verification sweeps over all labelled digraphs of a given size.

Each sweep enumerates every digraph on n vertices, filters down to the
connected members of the class under test, runs the operation being checked
and collects failures as (enumeration index, reason) pairs, so any failure
can be replayed with ``digraph_from_index``.

``run_sweep`` can shard the index range across worker processes; results do
not depend on the sharding.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

from .decompose import (
    classify_arc_locally_semicomplete,
    decompose_in_semicomplete,
    decompose_out_semicomplete,
    is_diperfect_in_class,
    verify_decomposition,
)
from .digraph import Digraph, set_relation
from .errors import ArcLocalError
from .generators import (
    brute_force_is_perfect,
    digraph_count,
    digraph_from_index,
    enumerate_digraphs,
)
from .patterns import find_pattern_violation
from .structure import (
    check_extended_cycle_certificate,
    find_induced_nonoriented_odd_cycle_ge5,
    recognize_odd_extended_cycle,
    strong_components,
)

SWEEP_PROPERTIES = (
    "main-theorem",
    "dichotomy",
    "diperfect",
    "lemmas",
    "non-oriented",
    "duality",
)


@dataclass
class SweepReport:
    """Tally of one sweep.  ``failures`` holds (index, reason) pairs."""

    n: int
    cls: str
    prop: str
    scanned: int = 0
    members: int = 0
    outcomes: Counter = field(default_factory=Counter)
    failures: list[tuple[int, str]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "SweepReport") -> None:
        self.scanned += other.scanned
        self.members += other.members
        self.outcomes.update(other.outcomes)
        self.failures.extend(other.failures)
        self.seconds = max(self.seconds, other.seconds)

    def summary(self) -> str:
        status = "0 failures" if self.ok else f"{len(self.failures)} FAILURES"
        return (
            f"{self.scanned} scanned, {self.members} members of class "
            f"'{self.cls}', {status} ({self.seconds:.1f}s)"
        )


def _is_member(d: Digraph, cls: str) -> bool:
    if not d.is_connected():
        return False
    if cls in ("in", "als") and find_pattern_violation(d, "in_in") is not None:
        return False
    if cls in ("out", "als") and find_pattern_violation(d, "out_out") is not None:
        return False
    return True


def _check_main_theorem(d: Digraph, cls: str) -> tuple[str, str | None]:
    dec = decompose_in_semicomplete(d) if cls == "in" else decompose_out_semicomplete(d)
    ok, reason = verify_decomposition(d, dec)
    if not ok:
        return dec.kind, f"verification failed: {reason}"
    return dec.kind, None


def _check_dichotomy(d: Digraph, cls: str) -> tuple[str, str | None]:
    outcome = classify_arc_locally_semicomplete(d)
    if outcome.kind == "odd_extended_cycle":
        cert = outcome.cert
        if cert is None:
            return outcome.kind, "odd extended cycle outcome without certificate"
        if len(cert.vertices()) != d.n:
            return outcome.kind, "certificate does not cover the vertex set"
        ok, reason = check_extended_cycle_certificate(d, cert.parts)
        if not ok:
            return outcome.kind, f"certificate invalid: {reason}"
        if cert.k < 5 or cert.k % 2 == 0:
            return outcome.kind, f"certificate has inadmissible part count {cert.k}"
    return outcome.kind, None


def _check_diperfect(d: Digraph, cls: str) -> tuple[str, str | None]:
    claimed, _cycle = is_diperfect_in_class(d)
    actual, witness = brute_force_is_perfect(d.underlying_graph())
    if claimed != actual:
        return (
            "diperfect" if claimed else "imperfect",
            f"diperfection claim {claimed} but oracle says {actual} ({witness})",
        )
    return "diperfect" if claimed else "imperfect", None


def _check_non_oriented(d: Digraph, cls: str) -> tuple[str, str | None]:
    cycle = find_induced_nonoriented_odd_cycle_ge5(d)
    if cycle is not None:
        return "member", f"non-oriented induced odd cycle {cycle} inside a member"
    return "member", None


def _check_duality(d: Digraph, cls: str) -> tuple[str, str | None]:
    fwd = find_pattern_violation(d, "in_in") is None
    bwd = find_pattern_violation(d.inverse(), "out_out") is None
    if fwd != bwd:
        return "digraph", "in-membership of d differs from out-membership of inverse"
    return "digraph", None


# ----------------------------------------------------------------------
# structural facts about class members (checked, not assumed)
# ----------------------------------------------------------------------


def lemma_failures(d: Digraph) -> list[str]:
    """Check the structural facts every arc-locally in-semicomplete member obeys.

    Facts checked, with sd the strong decomposition of d:

    1. Every vertex with a directed path to a non-trivial strong component K
       dominates some vertex of K.
    2. If an arc joins non-trivial components K1 -> K2, then K1 strictly
       dominates K2 or d[K1 union K2] is bipartite.
    3. If a vertex v dominates into a non-trivial component Q with d[Q]
       non-bipartite, then v dominates all of Q and no arc returns to v.
    4. If a non-initial component Q induces an odd extended cycle with
       k >= 5 parts: everything reachable from Q is trivial; the union W of
       components reaching Q strictly dominates Q; d[W] is semicomplete;
       exactly one initial component reaches Q.
    5. If the digraph is connected with at least two initial components,
       every initial component is trivial.
    """
    problems: list[str] = []
    sd = strong_components(d)
    comps = sd.components
    k = len(comps)
    nontrivial = [i for i in range(k) if len(comps[i]) > 1]
    for q in nontrivial:
        qverts = comps[q]
        qmask = sd.component_mask(q)
        reaching = sd.components_reaching(q)
        for i in reaching:
            for v in comps[i]:
                if d.out_masks[v] & qmask == 0:
                    problems.append(
                        f"vertex {v} reaches component {qverts} without dominating into it"
                    )
    for q1 in nontrivial:
        for q2 in nontrivial:
            if q1 == q2:
                continue
            m2 = sd.component_mask(q2)
            if not any(d.out_masks[v] & m2 for v in comps[q1]):
                continue
            rel = set_relation(d, comps[q1], comps[q2])
            if rel.strictly_dominates:
                continue
            both, _ = d.induced(comps[q1] + comps[q2])
            if both.bipartition() is None:
                problems.append(
                    f"components {comps[q1]} -> {comps[q2]}: neither strict "
                    "domination nor bipartite union"
                )
    for q in nontrivial:
        sub, _ = d.induced(comps[q])
        if sub.bipartition() is not None:
            continue
        qmask = sd.component_mask(q)
        for v in range(d.n):
            if (qmask >> v) & 1 or d.out_masks[v] & qmask == 0:
                continue
            if d.out_masks[v] & qmask != qmask or d.in_masks[v] & qmask != 0:
                problems.append(
                    f"vertex {v} dominates into non-bipartite component {comps[q]} "
                    "without strictly dominating it"
                )
    initials = sd.initial_components()
    for q in range(k):
        if q in initials or len(comps[q]) < 5:
            continue
        sub, labels = d.induced(comps[q])
        cert = recognize_odd_extended_cycle(sub)
        if cert is None:
            continue
        descendants = sd.components_reached_from(q)
        for i in descendants:
            if len(comps[i]) > 1:
                problems.append(
                    f"non-trivial component {comps[i]} reachable from odd "
                    f"extended cycle {comps[q]}"
                )
        reaching = sd.components_reaching(q)
        w = tuple(sorted(v for i in reaching for v in comps[i]))
        rel = set_relation(d, w, comps[q])
        if not rel.strictly_dominates:
            problems.append(
                f"components reaching odd extended cycle {comps[q]} do not "
                "strictly dominate it"
            )
        wsub, _ = d.induced(w)
        if not wsub.is_semicomplete():
            problems.append(
                f"union {w} of components reaching {comps[q]} is not semicomplete"
            )
        if sum(1 for i in initials if i in reaching) != 1:
            problems.append(
                f"odd extended cycle {comps[q]} is reached by "
                f"{sum(1 for i in initials if i in reaching)} initial components"
            )
    if d.is_connected() and len(initials) >= 2:
        for i in initials:
            if len(comps[i]) > 1:
                problems.append(f"non-trivial initial component {comps[i]}")
    return problems


def _check_lemmas(d: Digraph, cls: str) -> tuple[str, str | None]:
    problems = lemma_failures(d)
    if problems:
        return "member", "; ".join(problems)
    return "member", None


_CHECKS = {
    "main-theorem": _check_main_theorem,
    "dichotomy": _check_dichotomy,
    "diperfect": _check_diperfect,
    "lemmas": _check_lemmas,
    "non-oriented": _check_non_oriented,
    "duality": _check_duality,
}

# Which digraphs each property applies to: class members or every digraph.
_ALL_DIGRAPHS = {"duality"}


def _run_range(n: int, cls: str, prop: str, lo: int, hi: int) -> SweepReport:
    report = SweepReport(n=n, cls=cls, prop=prop)
    check = _CHECKS[prop]
    everything = prop in _ALL_DIGRAPHS
    for index in range(lo, hi):
        d = digraph_from_index(n, index)
        report.scanned += 1
        if not everything and not _is_member(d, cls):
            continue
        report.members += 1
        try:
            outcome, problem = check(d, cls)
        except ArcLocalError as exc:
            report.failures.append((index, f"{type(exc).__name__}: {exc}"))
            continue
        report.outcomes[outcome] += 1
        if problem is not None:
            report.failures.append((index, problem))
    return report


def run_sweep(n: int, cls: str, prop: str, jobs: int = 1) -> SweepReport:
    """Run one verification property over every digraph on n vertices."""
    if prop not in _CHECKS:
        raise ValueError(f"unknown sweep property {prop!r}")
    if cls not in ("in", "out", "als"):
        raise ValueError(f"unknown class {cls!r}")
    total = digraph_count(n)
    started = time.perf_counter()
    if jobs <= 1:
        report = _fast_run(n, cls, prop)
    else:
        from multiprocessing import Pool

        step = (total + jobs - 1) // jobs
        ranges = [
            (n, cls, prop, lo, min(lo + step, total)) for lo in range(0, total, step)
        ]
        report = SweepReport(n=n, cls=cls, prop=prop)
        with Pool(processes=jobs) as pool:
            for part in pool.starmap(_run_range, ranges):
                report.merge(part)
    report.seconds = time.perf_counter() - started
    return report


def _fast_run(n: int, cls: str, prop: str) -> SweepReport:
    """Single-process sweep using the enumerator (cheaper than re-indexing)."""
    report = SweepReport(n=n, cls=cls, prop=prop)
    check = _CHECKS[prop]
    everything = prop in _ALL_DIGRAPHS
    for index, d in enumerate(enumerate_digraphs(n)):
        report.scanned += 1
        if not everything and not _is_member(d, cls):
            continue
        report.members += 1
        try:
            outcome, problem = check(d, cls)
        except ArcLocalError as exc:
            report.failures.append((index, f"{type(exc).__name__}: {exc}"))
            continue
        report.outcomes[outcome] += 1
        if problem is not None:
            report.failures.append((index, problem))
    return report


def collect_member_indices(n: int, cls: str) -> list[int]:
    """Enumeration indices of every connected class member on n vertices."""
    return [
        index
        for index, d in enumerate(enumerate_digraphs(n))
        if _is_member(d, cls)
    ]
