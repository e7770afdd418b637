"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the report lines.
Criteria with time budgets assert the elapsed wall time as well; everything
numeric is exact (integer combinatorics throughout, no tolerances).
"""

import io
import pathlib
import random
import time
from collections import deque

import pytest

from infgon.arcs import (
    Arc,
    ArcFamily,
    Orbit,
    Window,
    arcs_in_window,
    classify,
    translate_family,
)
from infgon.cli import run_command
from infgon.dsl import parse_family, serialize_family
from infgon.homcalc import hom_dim, hom_dim_via_arcs, serre, shift
from infgon.mutation import NotMutable, exchange_arc, mutate
from infgon.oracle import (
    as_family,
    brute_replacements,
    catalan,
    enumerate_window_maximal,
)
from infgon.quiver import cluster_quiver, fz_mutate, quivers_equal_on, relabel_vertex
from infgon.triangulation import (
    Certified,
    Fountain,
    LocallyFinite,
    SplitFountains,
    certify_global_maximal,
    functorially_finite,
    perp_window,
    quadrilateral,
)

A = Arc
FIXTURES = pathlib.Path(__file__).parent / "fixtures"

FOUNTAIN = ArcFamily((Orbit(A(0, 2), 0, 1, None), Orbit(A(-2, 0), -1, 0, None)))
LEAPFROG = ArcFamily((Orbit(A(-1, 1), -1, 1, None), Orbit(A(-2, 1), -1, 1, None)))
SPLIT = ArcFamily((Orbit(A(-2, 0), -1, 0, None), Orbit(A(1, 3), 0, 1, None)))
CANONICAL = {"fountain": FOUNTAIN, "leapfrog": LEAPFROG, "split": SPLIT}


def _coords(lo: int, hi: int) -> list[Arc]:
    return [A(m, n) for m in range(lo, hi - 1) for n in range(m + 2, hi + 1)]


def _report(num: int, name: str, ok: bool, elapsed: float) -> None:
    state = "PASS" if ok else "FAIL"
    print(f"[criterion {num}] {state}  {name}  ({elapsed:.2f}s)")


def _timed(num, name, budget, body):
    t0 = time.perf_counter()
    ok = False
    try:
        body()
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        _report(num, name, ok, elapsed)
    assert elapsed < budget, f"criterion {num} exceeded {budget}s ({elapsed:.2f}s)"


def test_criterion_1_hom_cross_validation():
    coords = _coords(-12, 12)

    def body():
        for x in coords:
            for y in coords:
                assert hom_dim(x, y) == hom_dim_via_arcs(x, y)

    _timed(1, "Hom cross-validation on [-12,12]", 1.0, body)


def test_criterion_2_serre_and_region_duality():
    coords = _coords(-12, 12)

    def body():
        for x in coords:
            sx = serre(x)
            i, j = x.left - 1, x.right - 1  # apex of the shifted regions
            for y in coords:
                assert hom_dim(x, y) == hom_dim(y, sx)
                fwd = i + 1 <= y.left <= j - 1 and y.right >= j + 1
                bwd = y.left <= i - 1 and i + 1 <= y.right <= j - 1
                yi, yj = y.left - 1, y.right - 1
                dual_fwd = sx.left <= yi - 1 and yi + 1 <= sx.right <= yj - 1
                dual_bwd = yi + 1 <= sx.left <= yj - 1 and sx.right >= yj + 1
                assert fwd == dual_fwd and bwd == dual_bwd

    _timed(2, "Serre duality and region duality", 5.0, body)


def test_criterion_3_orthogonality_desk_scale():
    def body():
        all_suites = {}
        for n in range(4, 9):
            fams = enumerate_window_maximal(0, n - 1)
            assert len(fams) == catalan(n - 2)
            all_suites[n] = fams
        for n, fams in all_suites.items():
            w = Window(0, n - 1)
            for fset in fams:
                fam = as_family(fset)
                assert perp_window(fam, w) == arcs_in_window(fam, w) == sorted(fset)
        rng = random.Random(20260809)
        suite8 = all_suites[8]
        w8 = Window(0, 7)
        for _ in range(200):
            fset = rng.choice(suite8)
            keep = rng.sample(sorted(fset), rng.randint(1, len(fset) - 1))
            sub = as_family(keep)
            assert perp_window(sub, w8) != arcs_in_window(sub, w8)

    _timed(3, "orthogonal = member set across the Catalan suites", 10.0, body)


def test_criterion_4_flip_correctness():
    def body():
        lo, hi = 0, 7
        fams = enumerate_window_maximal(lo, hi)
        outer = A(lo, hi)
        graph = {f: set() for f in fams}
        for fset in fams:
            fam = as_family(fset)
            for a in sorted(fset):
                reps = brute_replacements(fset, a, lo, hi)
                if a == outer:
                    assert reps == []
                    with pytest.raises(NotMutable):
                        exchange_arc(fam, a)
                    continue
                star = exchange_arc(fam, a)
                assert reps == [star]
                mut = mutate(fam, a)
                new_members = frozenset(arcs_in_window(mut, Window(lo, hi)))
                assert new_members == (fset - {a}) | {star}
                back = mutate(mut, star)
                assert frozenset(arcs_in_window(back, Window(lo, hi))) == fset
                graph[fset].add(new_members)
        seen = {fams[0]}
        queue = deque([fams[0]])
        while queue:
            f = queue.popleft()
            for g in graph[f]:
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
        assert len(seen) == len(fams) == 132

    _timed(4, "flip correctness and connectivity on the 132-suite", 30.0, body)


def test_criterion_5_functorial_finiteness_classification():
    def body():
        for t in range(-5, 6):
            v = functorially_finite(translate_family(FOUNTAIN, t))
            assert v.functorially_finite and v.reason == Fountain(t)
            v = functorially_finite(translate_family(LEAPFROG, t))
            assert v.functorially_finite and v.reason == LocallyFinite()
            v = functorially_finite(translate_family(SPLIT, t))
            assert not v.functorially_finite
            assert v.reason == SplitFountains(t, t + 1)

    _timed(5, "functorial finiteness classification with translates", 10.0, body)


def _random_certified_family(rng: random.Random) -> ArcFamily:
    base = rng.choice(list(CANONICAL.values()))
    fam = translate_family(base, rng.randint(-20, 20))
    for _ in range(rng.randint(0, 3)):
        members = arcs_in_window(fam, Window(-30, 30))
        rng.shuffle(members)
        for a in members:
            try:
                fam = mutate(fam, a)
                break
            except NotMutable:
                continue
    return fam


def test_criterion_6_fountain_uniqueness():
    def body():
        rng = random.Random(987654321)
        families = list(CANONICAL.values())
        families += [_random_certified_family(rng) for _ in range(100)]
        right_without_left = 0
        for fam in families:
            assert isinstance(certify_global_maximal(fam), Certified)
            cls = classify(fam)
            assert len(cls.left_fountains) <= 1
            assert len(cls.right_fountains) <= 1
            if cls.right_fountains and not cls.left_fountains:
                right_without_left += 1
        # diagnostic only, never assumed by the engine
        print(f"  [diagnostic] right-fountain without left-fountain: {right_without_left} of {len(families)}")

    _timed(6, "fountain uniqueness over certified suite", 30.0, body)


def _face_vertices(fam: ArcFamily, a: Arc):
    q = quadrilateral(fam, a)
    verts = [a.left, a.right, q.inner_apex]
    if q.outer_apex is None:
        return None
    verts.append(q.outer_apex)
    return verts


def _interior(fam: ArcFamily, a: Arc, w: Window) -> bool:
    verts = _face_vertices(fam, a)
    return verts is not None and all(w.lo <= v <= w.hi for v in verts)


def test_criterion_7_fz_compatibility():
    def body():
        # finite suite: full quiver equality under mutation
        lo, hi = 0, 7
        w = Window(lo, hi)
        outer = A(lo, hi)
        for fset in enumerate_window_maximal(lo, hi):
            fam = as_family(fset)
            q1 = cluster_quiver(fam, w)
            pairs = set(q1.arrows)
            assert all(u != v for u, v in pairs)
            assert not any((v, u) in pairs for u, v in pairs)
            for a in sorted(fset - {outer}):
                star = exchange_arc(fam, a)
                got = fz_mutate(relabel_vertex(q1, a, star), star)
                want = cluster_quiver(mutate(fam, a), w)
                assert got == want
        # canonical infinite families on 9..17-vertex windows
        for name, fam in CANONICAL.items():
            for half in range(4, 9):
                w = Window(-half, half)
                q1 = cluster_quiver(fam, w)
                pairs = set(q1.arrows)
                assert all(u != v for u, v in pairs)
                assert not any((v, u) in pairs for u, v in pairs)
                for a in arcs_in_window(fam, w):
                    if not _interior(fam, a, w):
                        continue
                    star = exchange_arc(fam, a)
                    mut = mutate(fam, a)
                    if not _interior(mut, star, w):
                        continue
                    keep = {star}
                    for v in arcs_in_window(mut, w):
                        if v != star and _interior(fam, v, w) and _interior(mut, v, w):
                            keep.add(v)
                    got = fz_mutate(relabel_vertex(q1, a, star), star)
                    want = cluster_quiver(mut, w)
                    assert quivers_equal_on(got, want, keep)

    _timed(7, "loop/2-cycle freedom and FZ compatibility", 60.0, body)


def test_criterion_8_leapfrog_quiver_shape():
    def body():
        q = cluster_quiver(LEAPFROG, Window(-4, 4))
        assert len(q.vertices) == 7
        assert len(q.arrows) == 6
        # line graph: endpoints have one neighbour, the rest two
        degrees = {}
        for u, v in q.arrows:
            degrees[u] = degrees.get(u, 0) + 1
            degrees[v] = degrees.get(v, 0) + 1
        assert sorted(degrees.values()) == [1, 1, 2, 2, 2, 2, 2]
        # alternating orientation: every inner vertex is a source or a sink
        for v in q.vertices:
            ins = sum(1 for u, w in q.arrows if w == v)
            outs = sum(1 for u, w in q.arrows if u == v)
            assert ins == 0 or outs == 0
    _timed(8, "leapfrog window quiver is an alternating 7-line", 5.0, body)


def test_criterion_9_interface_stability():
    def body():
        for name in ("fountain.arcs", "leapfrog.arcs", "split.arcs"):
            text = (FIXTURES / name).read_text()
            fam = parse_family(text)
            again = parse_family(serialize_family(fam))
            w = Window(-10, 10)
            assert arcs_in_window(again, w) == arcs_in_window(fam, w)
            assert classify(again) == classify(fam)
            assert serialize_family(again) == serialize_family(fam)
        for argv in (
            ["classify", str(FIXTURES / "fountain.arcs"), "--json"],
            ["maximal", str(FIXTURES / "leapfrog.arcs"), "--json"],
            ["mutate", str(FIXTURES / "fountain.arcs"), "--arc", "0,2", "--json"],
            ["quiver", str(FIXTURES / "leapfrog.arcs"), "--window=-4:4", "--json"],
            ["hom", "--x", "0,2", "--y", "0,3", "--json"],
        ):
            runs = []
            for _ in range(2):
                out, err = io.StringIO(), io.StringIO()
                rc = run_command(argv, out, err)
                runs.append((rc, out.getvalue(), err.getvalue()))
            assert runs[0] == runs[1]
            assert runs[0][0] == 0
        out, err = io.StringIO(), io.StringIO()
        assert run_command(["oracle", "--vertices", "8"], out, err) == 0
        assert "FAIL" not in out.getvalue()

    _timed(9, "interface stability and oracle exit status", 30.0, body)
