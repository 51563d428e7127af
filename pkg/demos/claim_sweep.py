#!/usr/bin/env python3
"""Run the claim verifier at desk scale and look at what it finds.

Established claims (classical theorems) must come out clean; the adjudicated
restatements are tested empirically, and two of them really are false - the
sweep prints a counterexample and re-verifies it from the store.
"""

import tempfile
from pathlib import Path

from zham import (
    CounterexampleStore,
    find_hamiltonian_cycle,
    find_hamiltonian_cycle_bipartite,
    parse_graph_text,
    render_table,
    reverify_record,
    run_suite,
    strongly_connected,
    zmap,
)

print("exhaustive sweep, all labeled digraphs and bipartite graphs, n <= 3:")
verdicts = run_suite(
    ["thm-gz", "ghouila", "woodall", "mm-half", "zhu", "mm-k"], range(1, 4)
)
print(render_table(verdicts))

with tempfile.TemporaryDirectory() as tmp:
    store_path = Path(tmp) / "counterexamples.jsonl"

    print("random sweep of the cycle-transfer claim at n = 5 (seeded):")
    verdicts = run_suite(
        ["thm-zg"], [5], mode="random", samples=20_000, seed=7, store_path=store_path
    )
    print(render_table(verdicts))

    records = CounterexampleStore(store_path).load()
    if records:
        record = records[0]
        print("first persisted counterexample:")
        print(record["instance"])
        d = parse_graph_text(record["instance"])
        print("  strongly connected:      ", strongly_connected(d))
        print("  image is Hamiltonian:    ", find_hamiltonian_cycle_bipartite(zmap(d)).found)
        print("  digraph is Hamiltonian:  ", find_hamiltonian_cycle(d).found)
        print("  re-verifies from store:  ", reverify_record(record))
    else:
        print("no counterexamples in this sample")
