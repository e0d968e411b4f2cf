"""
Operational Chow cohomology of complete toric varieties as Minkowski weights.

A codimension-k Minkowski weight is an integer function c on the cones of
dimension n - k that kills every relation of the presentation of A_k, i.e.
satisfies the balancing condition around each cone of dimension n - k - 1.
So A^k_op = Hom(A_k, Z) holds by construction, and ``duality_report``
re-derives the same rank through the Smith form of the relations.

The cup product uses fan displacement: for a generic v,

    (c ∪ d)(gamma) = sum  [N : N_sigma + N_tau] c(sigma) d(tau)

over sigma ⊇ gamma of codim k, tau ⊇ gamma of codim l with
sigma ∩ (tau + v) nonempty, gamma of codim k + l.

Genericity is certified, not assumed. The certificate is our own
formalization: v must avoid span(sigma') + span(tau') for every pair of
cones whose spans do not fill N, and every pair read by the product formula
must meet (if at all) in the expected dimension dim sigma + dim tau - n.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .chow import ChowPresentation, CycleClass, chow_group, chow_presentation, hom_to_Z
from .errors import (
    BalancingViolation,
    DegreeMismatch,
    DegreeOutOfRange,
    FanNotComplete,
    GenericityFailure,
    InternalNonTransversePair,
    UncertifiedDisplacement,
)
from .intlinalg import INFINITE, AbelianGroup, IntMatrix, kernel_basis, lattice_index, rank, snf, solve_in_lattice
from .polyhedra import Fan, intersect_displaced

DENOMINATOR = 1000003
NUMERATOR_BOUND = 10**6
MAX_RETRIES = 32


def _require_complete(fan: Fan):
    if not fan.is_complete:
        raise FanNotComplete("Minkowski weights are only defined here for complete fans")


@dataclass(frozen=True, eq=False)
class MinkowskiWeight:
    """Integer values on the codim-k cones, in ``fan.indices_of_dim(n - k)`` order."""

    fan: Fan
    codim: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        if len(self.values) != len(self.cone_indices):
            raise ValueError("weight length does not match the number of codim-k cones")

    @property
    def cone_indices(self) -> list:
        return self.fan.indices_of_dim(self.fan.dim - self.codim)

    def __getitem__(self, cone_index) -> int:
        return self.values[self.cone_indices.index(tuple(cone_index))]

    def as_dict(self) -> dict:
        return dict(zip(self.cone_indices, self.values))

    def is_balanced(self) -> bool:
        R = chow_presentation(self.fan, self.codim).relations
        return not any(R.apply(self.values))

    def __eq__(self, other):
        if not isinstance(other, MinkowskiWeight):
            return NotImplemented
        return (self.fan, self.codim, self.values) == (other.fan, other.codim, other.values)

    def __hash__(self):
        return hash((self.codim, self.values))

    def __add__(self, other: MinkowskiWeight) -> MinkowskiWeight:
        if other.codim != self.codim or other.fan != self.fan:
            raise ValueError("cannot add weights of different codimension or fan")
        return MinkowskiWeight(self.fan, self.codim, [a + b for a, b in zip(self.values, other.values)])

    def __rmul__(self, a: int) -> MinkowskiWeight:
        return MinkowskiWeight(self.fan, self.codim, [a * x for x in self.values])

    def __repr__(self):
        return f"MinkowskiWeight(codim={self.codim}, values={list(self.values)})"


def weight_group(fan: Fan, k: int) -> list:
    """Basis of the codim-k Minkowski weights, i.e. of Hom(A_k, Z)."""
    _require_complete(fan)
    if not 0 <= k <= fan.dim:
        raise DegreeOutOfRange(f"codimension {k} outside 0..{fan.dim}")
    p = chow_presentation(fan, k)
    return [MinkowskiWeight(fan, k, w) for w in kernel_basis(p.relations)]


def unit_weight(fan: Fan) -> MinkowskiWeight:
    _require_complete(fan)
    return MinkowskiWeight(fan, 0, [1] * len(fan.indices_of_dim(fan.dim)))


def weight_from_values(fan: Fan, k: int, values_by_cone: dict) -> MinkowskiWeight:
    """Build a weight from ``{cone index tuple: value}``; missing cones get 0."""
    idx = fan.indices_of_dim(fan.dim - k)
    return MinkowskiWeight(fan, k, [values_by_cone.get(i, 0) for i in idx])


def coordinates(c: MinkowskiWeight, basis: list) -> tuple:
    """Integer coordinates of c in a weight basis."""
    return solve_in_lattice([b.values for b in basis], c.values)


def evaluate(c: MinkowskiWeight, z: CycleClass) -> int:
    """The pairing c ∩ z in A_0 = Z."""
    p = z.presentation
    if p.fan != c.fan or p.k != c.codim:
        raise DegreeMismatch(f"weight of codim {c.codim} cannot pair with A_{p.k}")
    return sum(a * b for a, b in zip(c.values, z.coefficients))


@dataclass(frozen=True, eq=False)
class DisplacementVector:
    """A rational displacement certified generic for codims (k, l) on a fan.

    ``certificate`` maps each (sigma, tau) pair read by the product formula
    to the emptiness flag and dimension of sigma ∩ (tau + v).
    """

    v: tuple
    seed: int
    attempt: int
    fan: Fan
    k: int
    l: int
    certificate: dict


def _scaled(v):
    return [int(x * DENOMINATOR) for x in v]


def _span_sum_hit(fan: Fan, v) -> tuple | None:
    n = fan.dim
    w = _scaled(v)
    spans = {}
    for idx in fan.cones:
        spans[idx] = [tuple(r) for r in fan.cone(idx).rays]
    for a, b in itertools.combinations_with_replacement(fan.cones, 2):
        vecs = sorted(set(spans[a]) | set(spans[b]))
        r = rank(IntMatrix.from_rows(vecs, cols=n)) if vecs else 0
        if r < n and (rank(IntMatrix.from_rows(vecs + [tuple(w)], cols=n))) == r:
            return (a, b)
    return None


def _product_pairs(fan: Fan, k: int, l: int):
    n = fan.dim
    for gamma in fan.indices_of_dim(n - k - l):
        st = fan.star_indices(gamma)
        sigmas = [s for s in st if fan.cone(s).dim == n - k]
        taus = [t for t in st if fan.cone(t).dim == n - l]
        for s in sigmas:
            for t in taus:
                yield gamma, s, t


def certify(fan: Fan, k: int, l: int, v) -> tuple[dict, tuple | None]:
    """Return (certificate, failing pair or None)."""
    bad = _span_sum_hit(fan, v)
    if bad is not None:
        return {}, bad
    n = fan.dim
    cert = {}
    for _, s, t in _product_pairs(fan, k, l):
        if (s, t) in cert:
            continue
        sigma, tau = fan.cone(s), fan.cone(t)
        res = intersect_displaced(sigma, tau, v)
        if res.nonempty and res.dim != sigma.dim + tau.dim - n:
            return cert, (s, t)
        cert[(s, t)] = res
    return cert, None


def pick_generic_displacement(
    fan: Fan, k: int, l: int, seed: int = 0, max_retries: int = MAX_RETRIES
) -> DisplacementVector:
    _require_complete(fan)
    n = fan.dim
    if k < 0 or l < 0 or k + l > n:
        raise DegreeOutOfRange(f"codimensions k={k}, l={l} need 0 <= k + l <= {n}")
    rng = random.Random(seed)
    failing = None
    for attempt in range(max_retries):
        v = tuple(Fraction(rng.randint(-NUMERATOR_BOUND, NUMERATOR_BOUND), DENOMINATOR) for _ in range(n))
        cert, failing = certify(fan, k, l, v)
        if failing is None:
            return DisplacementVector(v, seed, attempt, fan, k, l, cert)
    raise GenericityFailure(
        f"no generic displacement after {max_retries} tries (last failing pair {failing})",
        pair=failing,
    )


def cup_product(c: MinkowskiWeight, d: MinkowskiWeight, v: DisplacementVector) -> MinkowskiWeight:
    fan = c.fan
    if d.fan != fan:
        raise ValueError("weights live on different fans")
    if v.fan != fan or v.k != c.codim or v.l != d.codim:
        raise UncertifiedDisplacement(
            f"displacement was certified for codims ({v.k}, {v.l}), not ({c.codim}, {d.codim})"
        )
    n = fan.dim
    k, l = c.codim, d.codim
    cv, dv = c.as_dict(), d.as_dict()
    lattices = {}

    def span_basis(idx):
        if idx not in lattices:
            lattices[idx] = fan.cone(idx).span_lattice()
        return lattices[idx]

    out = {}
    for gamma, s, t in _product_pairs(fan, k, l):
        try:
            res = v.certificate[(s, t)]
        except KeyError:
            raise UncertifiedDisplacement(f"pair {(s, t)} missing from the certificate") from None
        if not res.nonempty:
            continue
        mult = lattice_index(span_basis(s) + span_basis(t), n)
        if mult == INFINITE:
            raise InternalNonTransversePair(f"cones {s} and {t} do not span N")
        out[gamma] = out.get(gamma, 0) + mult * cv[s] * dv[t]
    result = weight_from_values(fan, k + l, out)
    R = chow_presentation(fan, k + l).relations
    if any(R.apply(result.values)):
        raise BalancingViolation(f"cup product {result} is not balanced")
    return result


def structure_constants(fan: Fan, k: int, l: int, seed: int = 0, max_retries: int = MAX_RETRIES) -> dict:
    """Products of basis weights expanded in the codim k+l basis.

    Returns ``{(i, j): coordinates}`` with i, j indexing the codim-k and
    codim-l bases of ``weight_group``.
    """
    bk, bl, bkl = weight_group(fan, k), weight_group(fan, l), weight_group(fan, k + l)
    v = pick_generic_displacement(fan, k, l, seed, max_retries)
    return {
        (i, j): coordinates(cup_product(a, b, v), bkl)
        for i, a in enumerate(bk)
        for j, b in enumerate(bl)
    }


@dataclass(frozen=True)
class DualityReport:
    k: int
    weight_rank: int
    chow: AbelianGroup
    hom: AbelianGroup
    pairing_factors: tuple
    agrees: bool

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "weight_rank": self.weight_rank,
            "chow_group": str(self.chow),
            "hom_to_Z": str(self.hom),
            "pairing_invariant_factors": list(self.pairing_factors),
            "agrees": self.agrees,
        }


def duality_report(fan: Fan, k: int) -> DualityReport:
    """Compare A^k_op (weights) with Hom(A_k, Z) computed through the Smith form."""
    _require_complete(fan)
    basis = weight_group(fan, k)
    A = chow_group(fan, k)
    hom = hom_to_Z(A)
    p: ChowPresentation = chow_presentation(fan, k)
    # pairing of each weight with each generator class [V(sigma)]
    pairing = IntMatrix.from_rows(
        [[evaluate(w, CycleClass.orbit_closure(p, g)) for g in p.generators] for w in basis],
        cols=len(p.generators),
    )
    factors = snf(pairing).invariant_factors if basis else ()
    agrees = len(basis) == hom.free_rank and all(f == 1 for f in factors) and len(factors) == len(basis)
    return DualityReport(k, len(basis), A, hom, factors, agrees)
