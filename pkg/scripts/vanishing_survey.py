"""Survey random affine toric varieties: how often does Hom(A_k, Z) fail to
match the (always vanishing) A^k_op for k >= 1?

    python3 scripts/vanishing_survey.py --samples 500 --seed 1
"""

import argparse
import collections
import random
from dataclasses import dataclass

from toricchow import corpus
from toricchow.chow import chow_group, hom_to_Z
from toricchow.engine import cohomology
from toricchow.polyhedra import affine_fan


@dataclass
class SurveyConfig:
    samples: int = 200
    seed: int = 0
    max_rank: int = 4
    max_generators: int = 8
    bound: int = 4


def run(cfg: SurveyConfig) -> dict:
    rng = random.Random(cfg.seed)
    nonzero = collections.Counter()
    total = collections.Counter()
    torsion = collections.Counter()
    for _ in range(cfg.samples):
        cone = corpus.random_strongly_convex_cone(rng, cfg.max_rank, cfg.max_generators, cfg.bound)
        fan = affine_fan(cone)
        rep = cohomology(fan)
        assert all(e.group.is_trivial for e in rep.entries[1:])
        for k in range(1, fan.dim + 1):
            g = chow_group(fan, k)
            key = (fan.dim, k)
            total[key] += 1
            if hom_to_Z(g).free_rank:
                nonzero[key] += 1
            if g.torsion:
                torsion[key] += 1
    return {"total": total, "nonzero_hom": nonzero, "torsion": torsion}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SurveyConfig()).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = SurveyConfig(**vars(parser.parse_args(argv)))
    res = run(cfg)
    print(f"{'n':>2} {'k':>2} {'samples':>8} {'Hom(A_k,Z)!=0':>14} {'torsion':>8}")
    for key in sorted(res["total"]):
        n, k = key
        print(f"{n:>2} {k:>2} {res['total'][key]:>8} {res['nonzero_hom'][key]:>14} {res['torsion'][key]:>8}")


if __name__ == "__main__":
    main()
