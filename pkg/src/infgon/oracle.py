"""The window oracle: exhaustive finite-window brute force.

Everything here re-derives answers from first principles (the region
formulas and the crossing definition, applied by plain enumeration) so it
can sit in judgement over the symbolic engine.  It never calls the
engine's orbit machinery; comparisons between the two live in run_suite
and in the test suite.
"""

from __future__ import annotations

import math
import os
import time
from collections import deque
from typing import Callable, Iterable, Optional

from .arcs import Arc, ArcFamily, Orbit, Window, arcs_in_window, crosses, scan_key
from .mutation import NotMutable, exchange_arc, mutate
from .quiver import Quiver, cluster_quiver, fz_mutate, quivers_equal_on, relabel_vertex
from .triangulation import Maximal, is_window_maximal, perp_window

__all__ = [
    "catalan",
    "window_arcs",
    "brute_hom",
    "brute_first_uncovered",
    "brute_perp",
    "enumerate_window_maximal",
    "brute_replacements",
    "as_family",
    "run_suite",
    "ORACLE_LIMIT_ENV",
    "oracle_limit",
]

ORACLE_LIMIT_ENV = "INFGON_ORACLE_LIMIT"


def oracle_limit() -> int:
    raw = os.environ.get(ORACLE_LIMIT_ENV, "")
    try:
        return int(raw)
    except ValueError:
        return 8


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def window_arcs(lo: int, hi: int) -> list[Arc]:
    return [Arc(u, v) for u in range(lo, hi - 1) for v in range(u + 2, hi + 1)]


def brute_hom(x: Arc, y: Arc) -> int:
    """Hom dimension straight from the two region formulas at apex shift(x,1)."""
    i, j = x.left - 1, x.right - 1
    m, n = y.left, y.right
    in_minus = m <= i - 1 and i + 1 <= n <= j - 1
    in_plus = i + 1 <= m <= j - 1 and n >= j + 1
    return 1 if in_minus or in_plus else 0


def brute_first_uncovered(members: Iterable[Arc], lo: int, hi: int) -> Optional[Arc]:
    """First candidate (scan order) in the window neither member nor crossed."""
    ms = set(members)
    for c in sorted(window_arcs(lo, hi), key=scan_key):
        if c in ms:
            continue
        if not any(crosses(c, a) for a in ms):
            return c
    return None


def brute_perp(members: Iterable[Arc], lo: int, hi: int) -> list[Arc]:
    """Coordinates in the window orthogonal to every shifted member, by the
    region formulas alone (finite member sets only)."""
    ms = list(members)
    out = []
    for x in window_arcs(lo, hi):
        if all(brute_hom(Arc(a.left + 1, a.right + 1), x) == 0 for a in ms):
            out.append(x)
    return sorted(out)


def enumerate_window_maximal(lo: int, hi: int) -> list[frozenset[Arc]]:
    """All maximal non-crossing arc sets within [lo, hi], by exhaustive
    extension over all non-crossing subsets."""
    arcs = window_arcs(lo, hi)
    found: list[frozenset[Arc]] = []

    def is_maximal(chosen: list[Arc]) -> bool:
        cs = set(chosen)
        return all(
            a in cs or any(crosses(a, b) for b in chosen) for a in arcs
        )

    def rec(i: int, chosen: list[Arc]) -> None:
        if i == len(arcs):
            if is_maximal(chosen):
                found.append(frozenset(chosen))
            return
        a = arcs[i]
        if all(not crosses(a, b) for b in chosen):
            chosen.append(a)
            rec(i + 1, chosen)
            chosen.pop()
        rec(i + 1, chosen)

    rec(0, [])
    return sorted(found, key=lambda s: sorted(s))


def brute_replacements(members: frozenset[Arc], a: Arc, lo: int, hi: int) -> list[Arc]:
    """All arcs c != a making (members - {a}) + {c} maximal non-crossing."""
    rest = members - {a}
    out = []
    for c in window_arcs(lo, hi):
        if c == a or c in rest:
            continue
        if any(crosses(c, b) for b in rest):
            continue
        if brute_first_uncovered(rest | {c}, lo, hi) is None:
            out.append(c)
    return out


def as_family(members: Iterable[Arc]) -> ArcFamily:
    return ArcFamily(tuple(Orbit(a) for a in sorted(members)))


def run_suite(vertices: int, report: Callable[[str], None] = print) -> bool:
    """The brute-force window suite: enumeration counts, the
    maximality/orthogonality equivalence, flip uniqueness and connectivity,
    FZ compatibility.
    Returns True when every check passes."""
    lo, hi = 0, vertices - 1
    w = Window(lo, hi)
    ok = True

    def check(name: str, passed: bool, extra: str = "") -> None:
        nonlocal ok
        ok = ok and passed
        tail = f" ({extra})" if extra else ""
        report(f"{'PASS' if passed else 'FAIL'}  {name}{tail}")

    t0 = time.perf_counter()
    families = enumerate_window_maximal(lo, hi)
    expected = catalan(vertices - 2)
    check(
        f"maximal families on {vertices} vertices",
        len(families) == expected,
        f"{len(families)} found, Catalan says {expected}",
    )
    outer = Arc(lo, hi)
    check("forced outer arc present in every family", all(outer in f for f in families))

    thmA = True
    for fset in families:
        fam = as_family(fset)
        engine = is_window_maximal(fam, w)
        if not isinstance(engine, Maximal):
            thmA = False
            break
        if brute_first_uncovered(fset, lo, hi) is not None:
            thmA = False
            break
        members = arcs_in_window(fam, w)
        if perp_window(fam, w) != members or brute_perp(fset, lo, hi) != members:
            thmA = False
            break
    check("orthogonal = member set on every maximal family", thmA)

    flips_ok = True
    graph: dict[frozenset[Arc], set[frozenset[Arc]]] = {f: set() for f in families}
    for fset in families:
        fam = as_family(fset)
        for a in sorted(fset):
            reps = brute_replacements(fset, a, lo, hi)
            if a == outer:
                good = not reps
                try:
                    exchange_arc(fam, a)
                    good = False
                except NotMutable:
                    pass
            else:
                star = exchange_arc(fam, a)
                mut = mutate(fam, a)
                new_members = frozenset(arcs_in_window(mut, w))
                good = (
                    reps == [star]
                    and new_members == (fset - {a}) | {star}
                    and frozenset(arcs_in_window(mutate(mut, star), w)) == fset
                )
                if good:
                    graph[fset].add(new_members)
                    graph.setdefault(new_members, set()).add(fset)
            if not good:
                flips_ok = False
    check("flips: unique replacement, engine agreement, involution", flips_ok)

    seen = set()
    if families:
        queue = deque([families[0]])
        seen.add(families[0])
        while queue:
            f = queue.popleft()
            for g in graph.get(f, ()):
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
    check("flip graph connected", len(seen) == len(families))

    fz_ok = True
    for fset in families:
        fam = as_family(fset)
        q1 = cluster_quiver(fam, w)
        if any(u == v for u, v in q1.arrows):
            fz_ok = False
            break
        pairs = {(u, v) for u, v in q1.arrows}
        if any((v, u) in pairs for u, v in pairs):
            fz_ok = False
            break
        for a in sorted(fset - {outer}):
            star = exchange_arc(fam, a)
            expected_q = cluster_quiver(mutate(fam, a), w)
            got = fz_mutate(relabel_vertex(q1, a, star), star)
            if not quivers_equal_on(got, expected_q, got.vertices | expected_q.vertices):
                fz_ok = False
                break
        if not fz_ok:
            break
    check("quivers: no loops/2-cycles; FZ mutation matches flips", fz_ok)

    report(f"suite on {vertices} vertices finished in {time.perf_counter() - t0:.2f}s")
    return ok
