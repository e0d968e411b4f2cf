"""Print Chow groups, weight ranks and codim-1 products for the named fans.

    python3 scripts/corpus_tables.py [--seed 3] [--no-ring]
"""

import argparse
from dataclasses import dataclass

from toricchow import corpus
from toricchow.chow import chow_group
from toricchow.minkowski import structure_constants, weight_group


@dataclass
class TablesConfig:
    seed: int = 0
    ring: bool = True


def fan_rows(fan, cfg: TablesConfig):
    n = fan.dim
    chow = [str(chow_group(fan, k)) for k in range(n + 1)]
    yield f"{fan.name}: A_k for k = 0..{n}: {', '.join(chow)}"
    if fan.is_complete:
        ranks = [len(weight_group(fan, k)) for k in range(n + 1)]
        yield f"  weight ranks by codim: {ranks}"
        if cfg.ring and n >= 2:
            consts = structure_constants(fan, 1, 1, seed=cfg.seed)
            for (i, j), c in sorted(consts.items()):
                if i <= j:
                    yield f"  e{i} * e{j} = {list(c)}"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--no-ring", action="store_true")
    args = parser.parse_args(argv)
    cfg = TablesConfig(seed=args.seed, ring=not args.no_ring)
    fans = corpus.smooth_complete_corpus() + [corpus.square_cone_fan(), corpus.affine_line()]
    for fan in fans:
        for line in fan_rows(fan, cfg):
            print(line)


if __name__ == "__main__":
    main()
