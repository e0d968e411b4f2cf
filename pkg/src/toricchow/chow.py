"""
Chow groups A_k of toric varieties from fan data.

A_k(X) is generated by the orbit closures [V(sigma)] with dim sigma = n - k.
The relations are indexed by pairs (tau, m), where dim tau = n - k - 1 and
m runs over a basis of M(tau) = tau^perp ∩ M:

    sum over sigma ⊃ tau, dim sigma = dim tau + 1, of  <m, n_{sigma,tau}> [V(sigma)] = 0

with n_{sigma,tau} a lattice point of sigma generating N_sigma / N_tau.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DegreeOutOfRange
from .intlinalg import AbelianGroup, IntMatrix, cokernel, kernel_basis
from .polyhedra import Fan, normal_lattice_vector


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class ChowPresentation:
    """Generators and relation matrix presenting A_k(X(fan)).

    ``relations`` has one row per relation and one column per generator;
    ``relation_labels[i]`` is the (tau index set, m) pair behind row i.
    """

    fan: Fan
    k: int
    generators: tuple
    relations: IntMatrix
    relation_labels: tuple

    def generator_cones(self):
        return [self.fan.cone(g) for g in self.generators]


@dataclass(frozen=True)
class CycleClass:
    presentation: ChowPresentation
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if len(self.coefficients) != len(self.presentation.generators):
            raise ValueError("coefficient vector does not match the generator count")

    @classmethod
    def orbit_closure(cls, presentation: ChowPresentation, cone_index) -> CycleClass:
        """The class [V(sigma)] of a single generator."""
        cone_index = tuple(cone_index)
        return cls(
            presentation,
            tuple(1 if g == cone_index else 0 for g in presentation.generators),
        )

    def __add__(self, other: CycleClass) -> CycleClass:
        if other.presentation is not self.presentation:
            raise ValueError("classes come from different presentations")
        return CycleClass(
            self.presentation, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )


def _check_degree(fan: Fan, k: int):
    if not 0 <= k <= fan.dim:
        raise DegreeOutOfRange(f"degree {k} outside 0..{fan.dim}")


def _random_unimodular(n: int, rng: random.Random) -> list:
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n < 2:
        return [[rng.choice((1, -1))]] if n == 1 else U
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        q = rng.randint(-2, 2)
        U[i] = [a + q * b for a, b in zip(U[i], U[j])]
    if rng.random() < 0.5:
        U[0] = [-a for a in U[0]]
    return U


def chow_presentation(fan: Fan, k: int, rng: random.Random | None = None) -> ChowPresentation:
    """Presentation of A_k (dimension-k cycles).

    With ``rng`` the choices that must not matter are randomized: each
    n_{sigma,tau} gets a random element of N_tau added, and each M(tau)
    basis is hit by a random unimodular matrix. The default is the canonical,
    reproducible choice.
    """
    _check_degree(fan, k)
    n = fan.dim
    gens = fan.indices_of_dim(n - k)
    column = {g: j for j, g in enumerate(gens)}
    rows, labels = [], []
    for tau_idx in fan.indices_of_dim(n - k - 1):
        tau = fan.cone(tau_idx)
        perp = [tuple(m) for m in kernel_basis(IntMatrix.from_rows(tau.rays, cols=n))]
        if rng is not None and perp:
            T = _random_unimodular(len(perp), rng)
            perp = [
                tuple(sum(T[i][j] * perp[j][c] for j in range(len(perp))) for c in range(n))
                for i in range(len(perp))
            ]
        tau_lattice = tau.span_lattice()
        normals = {}
        for sigma_idx in fan.star_indices(tau_idx):
            if sigma_idx in column:
                v = normal_lattice_vector(tau, fan.cone(sigma_idx))
                if rng is not None:
                    for b in tau_lattice:
                        c = rng.randint(-5, 5)
                        v = tuple(a + c * x for a, x in zip(v, b))
                normals[sigma_idx] = v
        for m in perp:
            row = [0] * len(gens)
            for sigma_idx, v in normals.items():
                row[column[sigma_idx]] = _dot(m, v)
            rows.append(row)
            labels.append((tau_idx, m))
    return ChowPresentation(
        fan=fan,
        k=k,
        generators=tuple(gens),
        relations=IntMatrix.from_rows(rows, cols=len(gens)),
        relation_labels=tuple(labels),
    )


def chow_group(fan: Fan, k: int, rng: random.Random | None = None) -> AbelianGroup:
    """A_k(X(fan)) as an abelian group in invariant-factor form."""
    p = chow_presentation(fan, k, rng)
    return cokernel(p.relations.transpose())


def hom_basis(p: ChowPresentation) -> list:
    """Basis of Hom(A_k, Z): integer vectors on the generators killing every relation."""
    return kernel_basis(p.relations)


def hom_to_Z(g) -> AbelianGroup:
    """Hom(-, Z) of an AbelianGroup or of a presented Chow group.

    For a presentation the rank comes from the saturated kernel of the
    relation matrix, independently of any Smith form of it.
    """
    if isinstance(g, ChowPresentation):
        return AbelianGroup(len(hom_basis(g)), ())
    if isinstance(g, AbelianGroup):
        return AbelianGroup(g.free_rank, ())
    raise TypeError(f"cannot take Hom(-, Z) of {type(g).__name__}")
