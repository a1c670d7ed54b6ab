"""Random probes of the A-valued residual of partial associativity.

For each sample algebra and field, counts how often the residual vanishes
and how often it equals (sum of signs) x (common value).

    python3 scripts/defect_probe.py --trials 200
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass, field

from operadix.algebra import sample_algebra
from operadix.cochain import (ContextMonomial, DecomposableCochain, common_value,
                              defect_multiplier, dual_ta, pa_defect_numeric, random_map,
                              random_vector)
from operadix.components import component_basis
from operadix.fields import field_from_tag

SAMPLES = {
    3: [("odd_poly", {"truncation": 11}), ("rect_matrices", {"p": 2, "q": 2})],
    4: [("diagonal", {"n": 4, "dim": 3}), ("scalar", {"n": 4})],
}


@dataclass
class ProbeConfig:
    trials: int = 100
    seed: int = 0
    fields: list[str] = field(default_factory=lambda: ["q", "fp:2", "fp:3", "fp:5"])
    degree_bump: float = 0.5  # chance that one factor gets degree 1


def probe(A, n, cfg: ProbeConfig, rng: random.Random) -> tuple[int, int, int]:
    zero = matches = nontrivial = 0
    mult = defect_multiplier(n)
    for _ in range(cfg.trials):
        degrees = [0] * (2 * n - 1)
        if rng.random() < cfg.degree_bump:
            degrees[rng.randrange(len(degrees))] = 1
        cochains = [DecomposableCochain.of(A, [random_map(A, rng) for _ in range(1 + d * (n - 1))])
                    for d in degrees]
        weight = sum(degrees) + 2 * (n - 2)
        beta = ContextMonomial.from_tree(
            rng.choice(component_basis(dual_ta(n, A.field), weight).standard))
        xs = [random_vector(A, rng) for _ in range(beta.tree.leaves)]
        defect = pa_defect_numeric(n, cochains, beta, xs)
        common = common_value(cochains, beta, xs)
        zero += not any(defect)
        nontrivial += any(common)
        matches += defect == tuple(mult * x for x in common)
    return zero, matches, nontrivial


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--fields", nargs="+", default=ProbeConfig().fields)
    cfg = ProbeConfig(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    print(f"{'n':>2} {'algebra':<36} {'field':<6} {'zero':>5} {'=mult*common':>13} {'common!=0':>10}")
    for n, samples in SAMPLES.items():
        for kind, params in samples:
            for tag in cfg.fields:
                A = sample_algebra(kind, field_from_tag(tag), **params)
                zero, matches, nontrivial = probe(A, n, cfg, rng)
                label = kind + str(sorted(params.items()))
                print(f"{n:>2} {label:<36} {tag:<6} {zero:>5} {matches:>13} {nontrivial:>10}")


if __name__ == "__main__":
    main()
