import json

import pytest

from rankforge.canonical import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    from_graph6,
    to_graph6,
)
from rankforge.constructions import extremal_triangle_free, subset_incidence_graph
from rankforge.enumeration import (
    GraphClass,
    all_extensions,
    candidates,
    compatible,
    complete,
    enumerate_extremal,
    gen_cores,
    graphs_of_order,
    max_extension,
    merge_reports,
    report_from_payload,
    verify_theorem,
)
from rankforge.graphs import bipartition, bits, cycle_graph, is_reduced, is_triangle_free
from rankforge.linalg import adjacency_matrix, det_exact, rank_exact

from conftest import labeled_graphs


# ---------------------------------------------------------------------------
# Orderly generation
# ---------------------------------------------------------------------------


def _dedup_oracle_level(pred, n):
    """Independent isomorph-free generator: grow every level from all parents
    with every neighborhood, deduplicating by canonical certificate only."""
    from rankforge.graphs import Graph, add_vertex

    level = {canonical_form(Graph(1, (0,))).cert: Graph(1, (0,))}
    for _ in range(n - 1):
        nxt = {}
        for parent in level.values():
            for nb in range(1 << parent.n):
                child = add_vertex(parent, nb)
                if not pred(child):
                    continue
                cert = canonical_form(child).cert
                if cert not in nxt:
                    nxt[cert] = child
        level = nxt
    return set(level)


@pytest.mark.parametrize(
    "name,pred",
    [
        ("all", lambda g: True),
        ("triangle-free", is_triangle_free),
        ("bipartite", lambda g: bipartition(g) is not None),
    ],
)
def test_generation_matches_labeled_brute_force(name, pred):
    for n in range(1, 6):
        gen = graphs_of_order(n, name)
        brute = {canonical_form(g).cert for g in labeled_graphs(n) if pred(g)}
        certs = {canonical_form(g).cert for g in gen}
        assert len(certs) == len(gen)  # no isomorph emitted twice
        assert certs == brute


@pytest.mark.parametrize("n", (6, 7, 8))
def test_generation_matches_dedup_oracle(n):
    gen = {canonical_form(g).cert for g in graphs_of_order(n, "triangle-free")}
    oracle = _dedup_oracle_level(is_triangle_free, n)
    assert gen == oracle


def test_generation_matches_dedup_oracle_nine_vertices():
    # covers the level the rank-7 finding lives on
    gen = {canonical_form(g).cert for g in graphs_of_order(9, "triangle-free")}
    oracle = _dedup_oracle_level(is_triangle_free, 9)
    assert gen == oracle


def test_triangle_free_counts_to_nine():
    # matches the published isomorph counts for triangle-free graphs
    got = [len(graphs_of_order(n, "triangle-free")) for n in range(1, 10)]
    assert got == [1, 2, 3, 7, 14, 38, 107, 410, 1897]


# ---------------------------------------------------------------------------
# Cores and the extension closure
# ---------------------------------------------------------------------------


def test_gen_cores_rank5_count_matches_brute_force():
    cores = list(gen_cores(5, GraphClass.ALL))
    brute = {
        canonical_form(g).cert
        for g in labeled_graphs(5)
        if det_exact(adjacency_matrix(g)) != 0
    }
    assert {canonical_form(c.graph).cert for c in cores} == brute
    assert len(cores) == len(brute)


def test_gen_cores_examples():
    tf5 = list(gen_cores(5, GraphClass.TRIANGLE_FREE))
    c5_cert = canonical_form(cycle_graph(5)).cert
    assert any(canonical_form(c.graph).cert == c5_cert for c in tf5)
    tf4 = list(gen_cores(4, GraphClass.TRIANGLE_FREE))
    from rankforge.graphs import path_graph

    p4_cert = canonical_form(path_graph(4)).cert
    assert any(canonical_form(c.graph).cert == p4_cert for c in tf4)
    with pytest.raises(ValueError):
        list(gen_cores(3, GraphClass.ALL))
    with pytest.raises(ValueError):
        list(gen_cores(10, GraphClass.ALL))


def test_candidates_satisfy_definitions():
    core = next(
        c
        for c in gen_cores(5, GraphClass.TRIANGLE_FREE)
        if canonical_form(c.graph).cert == canonical_form(cycle_graph(5)).cert
    )
    cands = candidates(core)
    rows = set(core.graph.adj)
    for cand in cands:
        assert cand.vector != 0
        assert cand.vector not in rows
        assert sum(cand.image[i] for i in bits(cand.vector)) == 0
        # image really is adjugate @ vector
        for j in range(5):
            assert cand.image[j] == sum(core.adjug[j][i] for i in bits(cand.vector))


def test_compatible_is_symmetric_and_matches_rank_oracle():
    for core in gen_cores(6, GraphClass.TRIANGLE_FREE):
        cands = candidates(core)
        for i in range(min(len(cands), 8)):
            for j in range(i + 1, min(len(cands), 8)):
                bit = compatible(core, cands[i], cands[j])
                assert bit == compatible(core, cands[j], cands[i])
                if bit is not None:
                    g = complete(core, [cands[i], cands[j]])
                    assert g.has_edge(6, 7) == (bit == 1)
                    assert rank_exact(adjacency_matrix(g)) == 6


def test_completions_keep_rank():
    seen = 0
    for core in gen_cores(6, GraphClass.TRIANGLE_FREE):
        for cand_set in all_extensions(core, GraphClass.TRIANGLE_FREE, max_size=2):
            g = complete(core, cand_set)
            assert rank_exact(adjacency_matrix(g)) == 6
            assert is_reduced(g)
            seen += 1
            if seen >= 200:
                return
    assert seen > 0


def test_max_extension_on_cycle_core():
    core = next(
        c
        for c in gen_cores(5, GraphClass.TRIANGLE_FREE)
        if canonical_form(c.graph).cert == canonical_form(cycle_graph(5)).cert
    )
    res = max_extension(core, GraphClass.TRIANGLE_FREE_NONBIPARTITE)
    assert res.size == 0  # the bare 5-cycle is already maximal
    assert res.optimal_sets == ((),)
    assert complete(core, ()).n == 5


# ---------------------------------------------------------------------------
# Extremal reports
# ---------------------------------------------------------------------------


def test_enumerate_extremal_small_cases():
    rep = enumerate_extremal(5, GraphClass.TRIANGLE_FREE_NONBIPARTITE)
    assert rep.max_order == 5
    assert rep.extremal == (to_graph6(canonical_graph(cycle_graph(5))),)
    rep = enumerate_extremal(6, GraphClass.BIPARTITE)
    assert rep.max_order == 10
    assert rep.extremal == (to_graph6(canonical_graph(subset_incidence_graph(3))),)


def test_enumerate_extremal_rank4_nonbipartite_is_empty():
    rep = enumerate_extremal(4, GraphClass.TRIANGLE_FREE_NONBIPARTITE)
    assert rep.max_order == 0
    assert rep.extremal == ()


def test_rank7_extremal_pair_frozen():
    """Frozen from two independent enumeration routes (core closure and direct
    level-9 generation): rank 7 admits TWO extremal graphs of order c(7) = 9,
    the constructed family member plus a second graph. See README "Findings";
    this is the point where extremal uniqueness fails.
    """
    rep = enumerate_extremal(7, GraphClass.TRIANGLE_FREE_NONBIPARTITE)
    assert rep.max_order == 9
    assert len(rep.extremal) == 2
    expected_c7 = to_graph6(canonical_graph(extremal_triangle_free(7).graph))
    assert expected_c7 in rep.extremal
    other = next(g6 for g6 in rep.extremal if g6 != expected_c7)
    g = from_graph6(other)
    assert g.n == 9
    assert rank_exact(adjacency_matrix(g)) == 7
    assert is_triangle_free(g) and is_reduced(g) and bipartition(g) is None
    assert not are_isomorphic(g, extremal_triangle_free(7).graph)
    assert sorted(g.degree(v) for v in range(9)) == [2, 2, 3, 3, 3, 3, 3, 3, 4]


def test_rank7_pair_confirmed_by_direct_generation():
    """Dual-route check of the rank-7 result: filtering ALL triangle-free
    9-vertex graphs (no core closure involved) finds the same two graphs."""
    rep = enumerate_extremal(7, GraphClass.TRIANGLE_FREE_NONBIPARTITE)
    direct = set()
    for g in graphs_of_order(9, "triangle-free"):
        if (
            is_reduced(g)
            and bipartition(g) is None
            and rank_exact(adjacency_matrix(g)) == 7
        ):
            direct.add(to_graph6(canonical_graph(g)))
    assert direct == set(rep.extremal)
    assert len(direct) == 2


def test_determinism_across_job_counts():
    serial = enumerate_extremal(6, GraphClass.TRIANGLE_FREE_NONBIPARTITE, jobs=1)
    parallel = enumerate_extremal(6, GraphClass.TRIANGLE_FREE_NONBIPARTITE, jobs=2)
    a = serial.to_payload()
    b = parallel.to_payload()
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert a == b


def test_sharding_and_merge():
    full = enumerate_extremal(6, GraphClass.BIPARTITE)
    parts = [
        enumerate_extremal(6, GraphClass.BIPARTITE, shards=3, shard_index=i)
        for i in range(3)
    ]
    merged = merge_reports([p.to_payload() for p in parts])
    assert merged["max_order"] == full.max_order
    assert tuple(merged["extremal"]) == full.extremal
    assert merged["cores_processed"] == full.cores_processed
    with pytest.raises(ValueError):
        enumerate_extremal(6, GraphClass.BIPARTITE, shards=2, shard_index=5)


def test_report_payload_roundtrip():
    rep = enumerate_extremal(5, GraphClass.TRIANGLE_FREE)
    payload = rep.to_payload()
    assert list(payload) == [
        "rank",
        "class",
        "max_order",
        "extremal",
        "cores_processed",
        "candidates_total",
        "nodes_explored",
        "elapsed_ms",
    ]
    assert report_from_payload(json.loads(json.dumps(payload))) == rep


# ---------------------------------------------------------------------------
# Theorem checks
# ---------------------------------------------------------------------------


def test_verify_main_small():
    assert verify_theorem("main", 6).passed
    res = verify_theorem("main", 5)
    assert res.passed and res.report.max_order == 5


def test_verify_main_rank7_counterexample():
    res = verify_theorem("main", 7)
    assert not res.passed
    assert len(res.counterexamples) == 1
    g = from_graph6(res.counterexamples[0])
    assert rank_exact(adjacency_matrix(g)) == 7 and g.n == 9


def test_verify_bi():
    assert verify_theorem("bi", 4).passed
    assert verify_theorem("bi", 6).passed


def test_verify_bigen_rank6():
    res = verify_theorem("bigen", 6)
    assert res.passed, res.message


def test_verify_remark():
    for r in (7, 9, 11):
        res = verify_theorem("remark", r)
        assert res.passed, res.message
    with pytest.raises(ValueError):
        verify_theorem("remark", 8)


def test_verify_unknown():
    with pytest.raises(ValueError):
        verify_theorem("nope", 6)


def test_rank_guard_env_override(monkeypatch):
    from rankforge.enumeration import _rank_range_check, max_rank_guard

    assert max_rank_guard() == 9
    with pytest.raises(ValueError):
        _rank_range_check(11)
    monkeypatch.setenv("RANKFORGE_MAX_R", "11")
    assert max_rank_guard() == 11
    _rank_range_check(11)  # no longer raises
    monkeypatch.setenv("RANKFORGE_MAX_R", "7")
    assert max_rank_guard() == 9  # the variable raises the guard, never lowers it
