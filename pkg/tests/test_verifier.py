import json

import pytest

from zham import (
    CLAIMS,
    ESTABLISHED_CLAIM_IDS,
    CounterexampleStore,
    GraphError,
    StoreError,
    build_digraph,
    build_report,
    check_claim,
    enumerate_bipartite,
    enumerate_digraphs,
    enumerate_graphs,
    report_json,
    reverify_record,
    run_suite,
)
from zham.verifier import (
    BUDGET_EXHAUSTED,
    COUNTEREXAMPLE,
    HYPOTHESIS_MISS,
    PASS,
    arc_universe,
    render_table,
)

C3 = build_digraph(3, [(1, 2), (2, 3), (3, 1)])


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 64), (4, 4096)])
    def test_digraph_counts(self, n, count):
        assert sum(1 for _ in enumerate_digraphs(n)) == count

    @pytest.mark.parametrize("n,count", [(1, 2), (2, 16), (3, 512)])
    def test_bipartite_counts(self, n, count):
        assert sum(1 for _ in enumerate_bipartite(n)) == count

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 8), (4, 64)])
    def test_graph_counts(self, n, count):
        assert sum(1 for _ in enumerate_graphs(n)) == count

    def test_every_digraph_appears_exactly_once(self):
        seen = set(enumerate_digraphs(3))
        assert len(seen) == 64

    def test_bitmask_order_is_lexicographic_arc_indexing(self):
        universe = arc_universe(3)
        assert universe == [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]
        third = list(enumerate_digraphs(3))[0b101]
        assert third.arcs == frozenset({(1, 2), (2, 1)})

    def test_rejects_above_cap(self):
        with pytest.raises(GraphError):
            next(enumerate_digraphs(6))
        with pytest.raises(GraphError):
            next(enumerate_graphs(8))
        # explicit override lifts the cap
        assert next(enumerate_digraphs(6, max_n=6)).n == 6

    def test_rejects_bad_sizes(self):
        with pytest.raises(GraphError):
            next(enumerate_digraphs(0))


class TestCheckClaim:
    def test_thm_gz_passes_on_triangle(self):
        outcome, details = check_claim(CLAIMS["thm-gz"], C3)
        assert outcome == PASS
        assert details["hypothesis"]["cycle"] == [1, 2, 3]

    def test_ghouila_misses_on_triangle(self):
        outcome, _ = check_claim(CLAIMS["ghouila"], C3)
        assert outcome == HYPOTHESIS_MISS

    def test_budget_exhaustion_is_an_outcome(self):
        k5 = build_digraph(
            5, [(u, v) for u in range(1, 6) for v in range(1, 6) if u != v]
        )
        outcome, details = check_claim(CLAIMS["thm-zg"], k5, budget=3)
        assert outcome == BUDGET_EXHAUSTED
        assert details["stage"] == "hypothesis"

    def test_zhu_counterexample_reproduces(self):
        # one low-degree vertex hanging off a complete core: hypothesis holds
        # but no Hamiltonian cycle can pass through vertex 1 twice
        arcs = [(1, 2), (2, 1)] + [
            (u, v) for u in (2, 3, 4) for v in (2, 3, 4) if u != v
        ]
        d = build_digraph(4, arcs)
        outcome, details = check_claim(CLAIMS["zhu"], d)
        assert outcome == COUNTEREXAMPLE
        assert details["conclusion"]["hamiltonian"] is False


class TestRunSuite:
    def test_conservation_and_scan_counts(self):
        verdicts = run_suite(["thm-gz", "ghouila"], range(1, 4))
        for v in verdicts:
            assert v.instances_scanned == 1 + 4 + 64
            assert v.hypothesis_hits == v.passes + len(v.counterexamples) + v.exhausted_budget

    def test_established_claims_are_clean_at_small_scale(self):
        verdicts = run_suite(
            ["thm-gz", "ghouila", "woodall"], range(1, 4)
        )
        assert all(not v.counterexamples for v in verdicts)

    def test_exhaustive_runs_are_reproducible(self):
        kwargs = dict(n_values=range(1, 4), mode="exhaustive")
        first = run_suite(["mm-k"], **kwargs)
        second = run_suite(["mm-k"], **kwargs)
        r1 = report_json(build_report(first, mode="exhaustive", n_values=range(1, 4)))
        r2 = report_json(build_report(second, mode="exhaustive", n_values=range(1, 4)))
        assert r1 == r2

    def test_random_mode_is_seed_deterministic(self):
        kwargs = dict(
            n_values=[4], mode="random", samples=200, seed=99
        )
        first = run_suite(["thm-zg", "mm-half"], **kwargs)
        second = run_suite(["thm-zg", "mm-half"], **kwargs)
        assert first == second

    def test_unknown_claim_is_rejected(self):
        with pytest.raises(GraphError):
            run_suite(["no-such-claim"], [2])

    def test_bad_mode_is_rejected(self):
        with pytest.raises(GraphError):
            run_suite(["thm-gz"], [2], mode="guess")

    def test_counterexamples_stay_sorted(self):
        verdicts = run_suite(["mm-k"], [3])
        ces = verdicts[0].counterexamples
        assert list(ces) == sorted(ces, key=lambda ce: (ce.n, ce.instance))
        assert ces, "the pooled low-degree count claim is false at n=3"


class TestStore:
    def test_persist_load_reverify(self, tmp_path):
        store_path = tmp_path / "ce.jsonl"
        run_suite(["mm-k"], [3], store_path=store_path)
        records = CounterexampleStore(store_path).load()
        assert records
        line_keys = {
            "claim_id", "n", "instance", "details", "tool_version", "rng_seed"
        }
        for record in records:
            assert set(record) == line_keys
            assert reverify_record(record)

    def test_appends_rather_than_truncates(self, tmp_path):
        store_path = tmp_path / "ce.jsonl"
        run_suite(["mm-k"], [3], store_path=store_path)
        first_count = len(CounterexampleStore(store_path).load())
        run_suite(["mm-k"], [3], store_path=store_path)
        assert len(CounterexampleStore(store_path).load()) == 2 * first_count

    def test_missing_store_is_a_store_error(self, tmp_path):
        with pytest.raises(StoreError):
            CounterexampleStore(tmp_path / "absent.jsonl").load()

    def test_unwritable_store_is_a_store_error(self, tmp_path):
        store = CounterexampleStore(tmp_path)  # a directory, not a file
        from zham import Counterexample

        with pytest.raises(StoreError):
            store.append([Counterexample("mm-k", 3, "B 3\n", {})])

    def test_corrupt_line_is_a_store_error(self, tmp_path):
        path = tmp_path / "ce.jsonl"
        path.write_text("{not json}\n")
        with pytest.raises(StoreError):
            CounterexampleStore(path).load()

    def test_stored_instances_reverify_with_fresh_solvers(self, tmp_path):
        store_path = tmp_path / "zhu.jsonl"
        run_suite(["zhu"], range(1, 5), store_path=store_path)
        records = CounterexampleStore(store_path).load()
        assert records, "the low-degree-count digraph claim is false at n=4"
        assert all(reverify_record(r) for r in records)


class TestReport:
    def test_registry_covers_the_advertised_claims(self):
        assert set(CLAIMS) == {
            "thm-zg", "thm-gz", "thm-zg-pullback", "dirac", "ghouila",
            "faudree", "zhu", "mm-k", "mm-half", "cor1", "lv", "woodall",
            "cor2", "cor3a", "cor3b",
        }
        assert ESTABLISHED_CLAIM_IDS == {
            "thm-gz", "dirac", "ghouila", "mm-half", "lv", "woodall"
        }

    def test_report_is_json_clean_and_sorted(self):
        verdicts = run_suite(["thm-gz", "ghouila"], [2, 3])
        report = build_report(verdicts, mode="exhaustive", n_values=[2, 3])
        parsed = json.loads(report_json(report))
        assert [c["claim_id"] for c in parsed["claims"]] == ["ghouila", "thm-gz"]
        assert parsed["n_values"] == [2, 3]

    def test_table_mentions_every_claim(self):
        verdicts = run_suite(["thm-gz", "mm-k"], [3])
        table = render_table(verdicts)
        assert "thm-gz" in table and "mm-k" in table
        assert "FALSIFIED" in table  # mm-k fails at n=3
