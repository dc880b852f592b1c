"""Exit criteria for the package, one test per criterion.

Each test carries a ``criterion`` marker; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import random
import statistics
import time

import pytest

from kclique import (
    Graph,
    SolverOptions,
    all_pairs_distances,
    brute_force_max_clique,
    colour_order,
    generate_gnp,
    power_graph,
    solve_max_clique,
    solve_max_k_clique,
    unreachable,
    verify_k_clique,
    verify_k_club,
)
from kclique.bench import probability_grid, sweep
from kclique.bitset import full
from kclique.cli import main

from conftest import complete_graph

FIG1_2CLIQUE = frozenset({1, 2, 3, 4, 5, 6, 8})


def oracle_suite():
    """567 instances: n in 5..25, p in 0.1..0.9, three fixed seeds each."""
    cases = []
    for n in range(5, 26):
        for tenth in range(1, 10):
            for rep in range(3):
                seed = 10_000 * n + 100 * tenth + rep
                cases.append((n, tenth / 10, seed))
    return cases


@pytest.mark.criterion("Figure 1 golden values (k=1,2,3), each solve under 1 ms")
def test_figure1_golden(figure1):
    expected = {1: (4, frozenset({1, 2, 5, 8})), 2: (7, FIG1_2CLIQUE), 3: (8, frozenset(range(1, 9)))}
    for k, (size, members) in expected.items():
        runs = [solve_max_k_clique(figure1, k) for _ in range(5)]
        for sol in runs:
            assert sol.size == size and sol.optimal
            assert sol.members == members
        assert statistics.median(s.stats.elapsed for s in runs) < 1e-3


@pytest.mark.criterion("Figure 2 golden colouring order and bounds")
def test_figure2_colouring(figure1):
    co = colour_order(figure1, full(8))
    assert [figure1.labels[v] for v in co.order] == [1, 3, 4, 6, 2, 7, 5, 8]
    assert co.bounds == [1, 1, 1, 1, 2, 2, 3, 4]


@pytest.mark.criterion("Oracle equivalence: >=500 instances, k=1..4, both settings, < 5 min")
def test_oracle_equivalence():
    started = time.perf_counter()
    cases = oracle_suite()
    assert len(cases) >= 500
    mismatches = []
    for n, p, seed in cases:
        g = generate_gnp(n, p, seed)
        for k in (1, 2, 3, 4):
            want = brute_force_max_clique(power_graph(g, k)).size
            for dom in (True, False):
                sol = solve_max_k_clique(g, k, SolverOptions(use_domination=dom))
                if sol.size != want or not verify_k_clique(g, k, sol.members):
                    mismatches.append((n, p, seed, k, dom, sol.size, want))
    assert mismatches == []
    assert time.perf_counter() - started < 300


@pytest.mark.criterion("Domination soundness on the oracle suite; K50 lazy cost (0 sets, 50 nodes)")
def test_domination_soundness_and_cost():
    # Hand traces first: K3 and K4 take exactly n expand calls.
    assert solve_max_clique(complete_graph(3)).stats.nodes == 3
    assert solve_max_clique(complete_graph(4)).stats.nodes == 4

    for n, p, seed in oracle_suite():
        g = generate_gnp(n, p, seed)
        for k in (1, 2, 3, 4):
            on = solve_max_k_clique(g, k, SolverOptions(use_domination=True))
            off = solve_max_k_clique(g, k, SolverOptions(use_domination=False))
            assert on.optimal and off.optimal
            assert on.size == off.size

    sol = solve_max_clique(complete_graph(50), SolverOptions(use_domination=True))
    assert sol.size == 50
    assert sol.stats.domination_sets_computed == 0
    assert sol.stats.nodes == 50


@pytest.mark.criterion("Mean 2-clique size over 100 samples of G(50, 0.45) >= 49.5, < 10 min")
def test_random_graph_coverage():
    started = time.perf_counter()
    (record,) = sweep(50, 2, [0.45], samples=100, seed=0)
    assert record.samples == 100
    assert record.mean_size >= 49.5
    assert time.perf_counter() - started < 600


@pytest.mark.criterion("Complexity peaks in G(100, p), 20 samples: k=2 > k=3 > k=4, < 30 min")
def test_complexity_peak_ordering():
    started = time.perf_counter()
    grid = probability_grid(0.02, 0.30, 0.005)
    peaks = {k: max(r.mean_nodes for r in sweep(100, k, grid, samples=20, seed=0)) for k in (2, 3, 4)}
    print(f"peak mean nodes: {peaks}")
    assert peaks[2] > peaks[3] > peaks[4]
    assert time.perf_counter() - started < 1800


@pytest.mark.criterion("Power graph equals distance thresholding: 200 graphs, n<=50, k=1..5, < 1 min")
def test_power_graph_oracle():
    started = time.perf_counter()
    rng = random.Random(2024)
    for i in range(200):
        n = rng.randint(1, 50)
        g = generate_gnp(n, rng.uniform(0.0, 0.25), i)
        dist = all_pairs_distances(g)
        for k in range(1, 6):
            within = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if not unreachable(g, dist[u][v]) and dist[u][v] <= k
            ]
            expected = Graph.from_edges(n, within)
            assert power_graph(g, k).same_structure(expected)
    assert time.perf_counter() - started < 60


@pytest.mark.criterion("k-club implies k-clique on random subsets; Figure 1 2-clique is not a 2-club")
def test_club_clique_relationship(figure1):
    assert verify_k_clique(figure1, 2, FIG1_2CLIQUE)
    assert not verify_k_club(figure1, 2, FIG1_2CLIQUE)

    rng = random.Random(7)
    counterexamples = 0
    clubs = 0
    for seed in range(150):
        g = generate_gnp(rng.randint(2, 20), rng.uniform(0.05, 0.6), seed)
        for _ in range(10):
            s = rng.sample(range(g.n), rng.randint(1, g.n))
            for k in (1, 2, 3, 4):
                if verify_k_club(g, k, s):
                    clubs += 1
                    if not verify_k_clique(g, k, s):
                        counterexamples += 1
    assert clubs > 0
    assert counterexamples == 0


@pytest.mark.criterion("Determinism: identical sweep flags give byte-identical CSV")
def test_sweep_determinism(tmp_path, capsys):
    outputs = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        argv = ["sweep", "--n", "40", "--k", "2", "--p-min", "0.02", "--p-max", "0.2",
                "--p-step", "0.02", "--samples", "5", "--seed", "11", "--out", str(path)]
        assert main(argv) == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
    assert outputs[0].count(b"\n") == 11
