"""Named fans used throughout tests, scripts and the demo command."""

from __future__ import annotations

from .polyhedra import Fan, cone_from_generators, affine_fan, fan_from_maximal_cones

# the cone over the square with vertices (±1, 0), (0, ±1) at height 1
SQUARE_CONE_RAYS = [(1, 0, 1), (0, -1, 1), (-1, 0, 1), (0, 1, 1)]


def square_cone_fan() -> Fan:
    return affine_fan(cone_from_generators(3, SQUARE_CONE_RAYS), name="square cone")


def affine_line() -> Fan:
    return affine_fan(cone_from_generators(1, [(1,)]), name="A1")


def projective_space(n: int) -> Fan:
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    tops = [[r for j, r in enumerate(rays) if j != i] for i in range(n + 1)]
    return fan_from_maximal_cones(n, tops, name=f"P{n}")


def p1xp1() -> Fan:
    e1, e2, f1, f2 = (1, 0), (0, 1), (-1, 0), (0, -1)
    return fan_from_maximal_cones(2, [[e1, e2], [e2, f1], [f1, f2], [f2, e1]], name="P1xP1")


def hirzebruch(a: int) -> Fan:
    u1, u2, u3, u4 = (1, 0), (0, 1), (-1, a), (0, -1)
    return fan_from_maximal_cones(2, [[u1, u2], [u2, u3], [u3, u4], [u4, u1]], name=f"F{a}")


def smooth_complete_corpus() -> list:
    return [
        projective_space(1),
        projective_space(2),
        p1xp1(),
        projective_space(3),
        hirzebruch(0),
        hirzebruch(1),
        hirzebruch(2),
        hirzebruch(3),
    ]


def random_strongly_convex_cone(rng, max_rank: int = 4, max_generators: int = 8, bound: int = 4):
    """Seeded random pointed cone: generators drawn inside an open half-space.

    Lattice rank is uniform in 1..max_rank, entries lie in [-bound, bound].
    """
    n = rng.randint(1, max_rank)
    while True:
        u = [rng.randint(-bound, bound) for _ in range(n)]
        if any(u):
            break
    m = rng.randint(1, max_generators)
    gens = []
    while len(gens) < m:
        v = [rng.randint(-bound, bound) for _ in range(n)]
        if sum(a * b for a, b in zip(u, v)) > 0:
            gens.append(v)
    return cone_from_generators(n, gens)
