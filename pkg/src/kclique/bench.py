"""Run records for single instances and random-graph sweeps."""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from statistics import fmean
from typing import Sequence, TextIO

from kclique.graph import Graph, density, generate_gnp
from kclique.oracle import verify_k_clique
from kclique.power import power_graph
from kclique.solver import Solution, SolverOptions, solve_max_k_clique

SWEEP_FIELDS = ("n", "p", "k", "samples", "mean_size", "mean_nodes", "seed")


class SelfCheckError(AssertionError):
    pass


@dataclass(frozen=True)
class RunRecord:
    instance: str
    k: int
    density: float
    size: int
    nodes: int
    elapsed: float
    optimal: bool
    domination: bool

    def to_tsv(self, members: Sequence = ()) -> str:
        fields = [
            self.instance,
            str(self.k),
            f"{self.density:.6f}",
            str(self.size),
            str(self.nodes),
            f"{self.elapsed:.6f}",
            "optimal" if self.optimal else "aborted",
            "domination" if self.domination else "no-domination",
            " ".join(str(m) for m in members),
        ]
        return "\t".join(fields)


@dataclass(frozen=True)
class SweepRecord:
    n: int
    p: float
    k: int
    samples: int
    mean_size: float
    mean_nodes: float
    seed: int

    def as_row(self) -> list[str]:
        return [
            str(self.n),
            f"{self.p:g}",
            str(self.k),
            str(self.samples),
            f"{self.mean_size:.6f}",
            f"{self.mean_nodes:.6f}",
            str(self.seed),
        ]


def run_instance(
    g: Graph,
    name: str,
    k: int,
    opts: SolverOptions,
    check: bool = True,
) -> tuple[RunRecord, Solution]:
    """Solve one instance; with ``check`` the answer is re-verified by the oracle."""
    solution = solve_max_k_clique(g, k, opts)
    if check and not verify_k_clique(g, k, solution.members):
        raise SelfCheckError(f"solver returned a set that is not a {k}-clique")
    record = RunRecord(
        instance=name,
        k=k,
        density=density(power_graph(g, k)),
        size=solution.size,
        nodes=solution.stats.nodes,
        elapsed=solution.stats.elapsed,
        optimal=solution.optimal,
        domination=opts.use_domination,
    )
    return record, solution


def probability_grid(p_min: float, p_max: float, p_step: float) -> list[float]:
    """Inclusive grid ``p_min, p_min + step, ...`` up to ``p_max``."""
    if not (0.0 <= p_min <= p_max <= 1.0):
        raise ValueError(f"need 0 <= p_min <= p_max <= 1, got {p_min}, {p_max}")
    if p_step <= 0:
        if p_min == p_max:
            return [p_min]
        raise ValueError(f"p_step must be positive, got {p_step}")
    count = int(round((p_max - p_min) / p_step, 9)) + 1
    return [round(p_min + i * p_step, 10) for i in range(count)]


def _solve_sample(args: tuple[int, float, int, int, bool]) -> tuple[int, int]:
    n, p, k, seed, use_domination = args
    sol = solve_max_k_clique(generate_gnp(n, p, seed), k, SolverOptions(use_domination=use_domination))
    return sol.size, sol.stats.nodes


def sweep(
    n: int,
    k: int,
    probabilities: Sequence[float],
    samples: int,
    seed: int = 0,
    use_domination: bool = False,
    jobs: int = 1,
) -> list[SweepRecord]:
    """Mean k-clique size and node count over ``samples`` graphs per ``p``.

    Sample ``j`` at every ``p`` uses seed ``seed + j``.  Rows come back in grid
    order whatever ``jobs`` is.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    tasks = [(n, p, k, seed + j, use_domination) for p in probabilities for j in range(samples)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_solve_sample, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_solve_sample(t) for t in tasks]
    records = []
    for idx, p in enumerate(probabilities):
        chunk = results[idx * samples:(idx + 1) * samples]
        records.append(
            SweepRecord(
                n=n,
                p=p,
                k=k,
                samples=samples,
                mean_size=fmean(size for size, _ in chunk),
                mean_nodes=fmean(nodes for _, nodes in chunk),
                seed=seed,
            )
        )
    return records


def write_sweep_csv(records: Sequence[SweepRecord], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_FIELDS)
    for rec in records:
        writer.writerow(rec.as_row())
