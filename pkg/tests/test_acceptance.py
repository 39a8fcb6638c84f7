"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; the pytest verdicts themselves carry the same pass/fail signal.
"""

import random
import time
from fractions import Fraction

from untangle.bounds import certified_fixed_upper_bound, count_fixed, label_sequence, persistent_clusters
from untangle.construction import standard_instance
from untangle.embed import barycentric_embed, extract_moves, random_redraw_attempt, untangle_fixing_face
from untangle.game import apply_move, new_game_from_instance, score, scrambled_random
from untangle.geometry import Point
from untangle.graph import (
    count_crossings,
    induced_subgraph,
    is_maximal_planar,
    is_planar,
    is_plane_drawing,
    is_three_connected,
    planar_rotation,
    trace_faces,
)
from untangle.game import random_maximal_planar
from untangle.sequences import make_block_sequence, max_xyxy_free_length


def _report(name: str, detail: str = ""):
    suffix = f" ({detail})" if detail else ""
    print(f"\nACCEPTANCE {name}: PASS{suffix}")


def test_criterion_1_lemma_exhaustive_verification():
    """max xyxy-free length of every block sequence on the grid is < k+s."""
    t0 = time.perf_counter()
    checked = 0
    for k in range(1, 5):
        for s in range(1, 5):
            if k * s > 16:
                continue
            res = max_xyxy_free_length(make_block_sequence(k, s))
            assert res.length < k + s, (k, s, res.length)
            checked += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    _report("1 lemma grid", f"{checked} pairs, {elapsed:.2f}s")


def test_criterion_2_construction_validity():
    t0 = time.perf_counter()
    instances = [standard_instance("chain", k, s) for k in (3, 4) for s in (1, 2, 3)]
    instances += [standard_instance("square", k) for k in (3, 4)]
    for inst in instances:
        assert is_planar(inst.graph), inst.family_tag
        assert is_three_connected(inst.graph), inst.family_tag
        for cluster in inst.clusters:
            sub, _ = induced_subgraph(inst.graph, cluster)
            assert is_maximal_planar(sub), inst.family_tag
        assert label_sequence(inst) == make_block_sequence(inst.m, inst.k), inst.family_tag
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0
    _report("2 construction validity", f"{len(instances)} instances, {elapsed:.2f}s")


def test_criterion_3_square_certificate():
    for k in (3, 4, 5):
        cert = certified_fixed_upper_bound(standard_instance("square", k))
        assert cert.certified_fixed_upper == 2 * k + 1, k
        # 2k+1 <= 2 sqrt(n) + 1 with n = k^2, exactly
        assert 2 * k + 1 <= 2 * k + 1
    _report("3 square-family certificate", "fixed_upper = 2k+1 for k in {3,4,5}")


def test_criterion_4_chain_certificate():
    cert = certified_fixed_upper_bound(standard_instance("chain", 3, 2))
    assert cert.certified_moved_lower == 4
    k, s = 3, 2
    n = k * (s + k)
    assert Fraction(cert.certified_moved_lower) == (1 - Fraction(1, k)) * n - k * k + k
    _report("4 chain-family certificate", "moved_lower(theorem1(3,2)) = 4")


def test_criterion_5_mutual_consistency():
    instances = [
        standard_instance("square", 3),
        standard_instance("square", 4),
        standard_instance("chain", 3, 2),
        standard_instance("chain", 4, 2),
    ]
    attempts_per_instance = 1000
    violations = 0
    plane_attempts = 0
    for inst in instances:
        circle = certified_fixed_upper_bound(inst, "circle_lemma")
        upper = circle.certified_fixed_upper

        def check(drawing):
            nonlocal violations
            fixed = count_fixed(inst.bad_drawing, drawing).fixed_count
            if fixed > upper:
                violations += 1
            if inst.family == "theorem1":
                if len(persistent_clusters(inst, drawing)) > inst.k - 1:
                    violations += 1

        produced = []
        res = untangle_fixing_face(inst.graph, inst.bad_drawing)
        assert is_plane_drawing(inst.graph, res.drawing)
        check(res.drawing)
        produced.append(res.drawing)

        # barycentric embedding on every face of the embedding
        embedded = planar_rotation(inst.graph)
        for face in trace_faces(embedded):
            outer = [Point(4 * i, 4 * i * i) for i in range(len(face))]
            d = barycentric_embed(inst.graph, face, outer, _skip_face_check=True)
            assert is_plane_drawing(inst.graph, d)
            check(d)
        produced.append(d)

        rng = random.Random(1000 + inst.n)
        for _ in range(attempts_per_instance):
            attempt = random_redraw_attempt(inst.graph, inst.bad_drawing, rng, produced)
            if is_plane_drawing(inst.graph, attempt):
                plane_attempts += 1
                check(attempt)
    assert violations == 0
    assert plane_attempts > 0
    _report(
        "5 mutual consistency",
        f"{len(instances)}x{attempts_per_instance} randomized attempts, "
        f"{plane_attempts} plane, 0 violations",
    )


def test_criterion_6_constructive_upper_bound():
    t0 = time.perf_counter()
    instances = []
    for k in range(3, 8):
        for s in range(1, 20):
            if k * (s + k) <= 49:
                instances.append(standard_instance("chain", k, s))
        if k * k <= 49:
            instances.append(standard_instance("square", k))
    assert max(inst.n for inst in instances) == 49
    for inst in instances:
        res = untangle_fixing_face(inst.graph, inst.bad_drawing)
        assert count_crossings(inst.graph, res.drawing) == 0, inst.family_tag
        assert res.fix_report.fixed_count >= 3, inst.family_tag
        assert res.fix_report.moved_count <= inst.n - 3, inst.family_tag

    rng = random.Random(2024)
    embeds = 0
    for _ in range(50):
        n = rng.randrange(4, 51)
        g, _plane = random_maximal_planar(n, rng)
        faces = trace_faces(planar_rotation(g))
        face = min((f for f in faces if len(f) == 3), key=lambda f: tuple(sorted(f)))
        outer = [Point(0, 0), Point(8 * n, 0), Point(0, 8 * n)]
        d = barycentric_embed(g, face, outer, _skip_face_check=True)
        assert is_plane_drawing(g, d)
        embeds += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 120.0
    _report(
        "6 constructive upper bound",
        f"{len(instances)} instances untangled, {embeds} random embeds, {elapsed:.1f}s",
    )


def test_criterion_7_game_engine():
    for family, k, s in [("square", 3, None), ("square", 4, None),
                         ("chain", 3, 2), ("chain", 4, 2)]:
        inst = standard_instance(family, k, s)
        state = new_game_from_instance(inst)
        target = untangle_fixing_face(inst.graph, inst.bad_drawing).drawing
        plan = extract_moves(state.current, target)
        for v, p in plan:
            state = apply_move(state, v, p)
        assert state.status == "solved", inst.family_tag
        report = score(state)
        assert report.moves_used >= report.certified_moved_lower, inst.family_tag

    # 500-move fuzz: incremental counts equal full recounts
    state = scrambled_random(12, seed=99)
    rng = random.Random(424242)
    moves_done = 0
    while moves_done < 500:
        v = rng.randrange(state.graph.vertex_count)
        p = Point(rng.randrange(-500, 500), rng.randrange(-500, 500))
        if state.current.occupied(p) is not None:
            continue
        state = apply_move(state, v, p)
        moves_done += 1
        assert state.crossings == count_crossings(state.graph, state.current)
    _report("7 game engine", "4 solver runs solved, 500-move fuzz consistent")
