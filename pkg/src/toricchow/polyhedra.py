"""
Rational polyhedral cones and fans in a lattice N = Z^n.

Cones are pointed and stored canonically by their sorted primitive rays.
The dual description (facet normals plus the equations of the linear span)
comes from brute-force double description in exact integer arithmetic, which
is only meant for desk-scale input: at most ``MAX_GENERATORS`` generators and
cone dimension at most ``MAX_DIM``.

Membership convention: x lies in a cone iff ``e . x == 0`` for every
equation e and ``u . x >= 0`` for every facet normal u. Facet normals are
primitive integer vectors chosen inside the linear span of the cone, which
makes them unique.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ConeTooLarge, InvalidFan, NotAFacetPair, NotStronglyConvex, ZeroVector
from .intlinalg import (
    IntMatrix,
    is_unimodular,
    kernel_basis,
    primitive,
    rank,
    saturate,
    snf,
    xgcd_list,
)
from .lp import Constraint, affine_hull_dimension, is_feasible

MAX_GENERATORS = 12
MAX_DIM = 5


@dataclass(frozen=True)
class Lattice:
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("lattice rank must be nonnegative")


def _as_lattice(lattice) -> Lattice:
    return lattice if isinstance(lattice, Lattice) else Lattice(int(lattice))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class Cone:
    """A strongly convex rational cone. Identity is the sorted ray set."""

    lattice: Lattice
    rays: tuple
    dim: int = field(compare=False)
    facet_normals: tuple = field(compare=False)
    equations: tuple = field(compare=False)

    @property
    def generators(self):
        return self.rays

    @property
    def ambient_rank(self) -> int:
        return self.lattice.rank

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.lattice.rank

    def contains(self, x: Sequence) -> bool:
        return all(_dot(e, x) == 0 for e in self.equations) and all(
            _dot(u, x) >= 0 for u in self.facet_normals
        )

    def relative_interior_contains(self, x: Sequence) -> bool:
        return all(_dot(e, x) == 0 for e in self.equations) and all(
            _dot(u, x) > 0 for u in self.facet_normals
        )

    def is_face_of(self, other: Cone) -> bool:
        if self.lattice != other.lattice or not set(self.rays) <= set(other.rays):
            return False
        tight = [u for u in other.facet_normals if all(_dot(u, r) == 0 for r in self.rays)]
        face_rays = {r for r in other.rays if all(_dot(u, r) == 0 for u in tight)}
        return face_rays == set(self.rays)

    def span_lattice(self) -> list:
        """Basis of N_sigma = span(sigma) ∩ N."""
        return saturate(self.rays, self.lattice.rank)

    def is_smooth(self) -> bool:
        if not self.rays:
            return True
        d = snf(IntMatrix.from_rows(self.rays, cols=self.lattice.rank))
        return all(f == 1 for f in d.invariant_factors)

    def __repr__(self):
        return f"Cone({list(map(list, self.rays))}, dim={self.dim})"


def cone_from_generators(lattice, vectors: Iterable[Sequence[int]]) -> Cone:
    """Canonical cone spanned by ``vectors`` (an empty list gives {0})."""
    lattice = _as_lattice(lattice)
    n = lattice.rank
    gens = []
    for v in vectors:
        v = tuple(int(x) for x in v)
        if len(v) != n:
            raise ValueError(f"vector {v} does not live in Z^{n}")
        if not any(v):
            raise ZeroVector("cone generators must be nonzero")
        gens.append(primitive(v))
    gens = sorted(set(gens))
    if len(gens) > MAX_GENERATORS:
        raise ConeTooLarge(f"{len(gens)} generators exceeds the limit of {MAX_GENERATORS}")
    if not gens:
        eqs = tuple(tuple(e) for e in kernel_basis(IntMatrix.zeros(0, n)))
        return Cone(lattice, (), 0, (), eqs)

    G = IntMatrix.from_rows(gens, cols=n)
    d = rank(G)
    if d > MAX_DIM:
        raise ConeTooLarge(f"cone dimension {d} exceeds the limit of {MAX_DIM}")
    equations = [tuple(e) for e in kernel_basis(G)]

    normals = set()
    for subset in itertools.combinations(gens, d - 1):
        # normal must lie in span(sigma) and vanish on the subset
        K = kernel_basis(IntMatrix.from_rows(equations + list(subset), cols=n))
        if len(K) != 1:
            continue
        u = K[0]
        vals = [_dot(u, g) for g in gens]
        if all(x >= 0 for x in vals):
            normals.add(tuple(u))
        elif all(x <= 0 for x in vals):
            normals.add(tuple(-x for x in u))
    normals = sorted(normals)
    if (rank(normals) if normals else 0) != d:
        raise NotStronglyConvex(f"cone generated by {gens} contains a line")

    rays = []
    for g in gens:
        tight = [u for u in normals if _dot(u, g) == 0]
        if (rank(tight) if tight else 0) == d - 1:
            rays.append(g)
    return Cone(lattice, tuple(rays), d, tuple(normals), tuple(equations))


def zero_cone(lattice) -> Cone:
    return cone_from_generators(lattice, [])


def generated_contains(cone: Cone, x: Sequence) -> bool:
    """Membership via feasibility of ``x = sum(l_i r_i), l >= 0``.

    Independent of the facet description; used to cross-check it.
    """
    m = len(cone.rays)
    n = cone.lattice.rank
    ineqs = [Constraint(tuple(1 if j == i else 0 for j in range(m)), 0) for i in range(m)]
    eqs = [(tuple(r[i] for r in cone.rays), x[i]) for i in range(n)]
    return is_feasible(ineqs, eqs, nvars=m)


def faces(c: Cone) -> list:
    """All faces of c, from {0} up to c, ordered by (dim, rays)."""
    seen = {frozenset(c.rays)}
    frontier = [frozenset(c.rays)]
    while frontier:
        nxt = []
        for F in frontier:
            for u in c.facet_normals:
                G = frozenset(r for r in F if _dot(u, r) == 0)
                if G not in seen:
                    seen.add(G)
                    nxt.append(G)
        frontier = nxt
    out = [cone_from_generators(c.lattice, sorted(F)) for F in seen]
    return sorted(out, key=lambda f: (f.dim, f.rays))


def _in_cone_constraints(c: Cone, shift=None):
    """Constraints for ``x - shift in c``."""
    n = c.lattice.rank
    shift = shift if shift is not None else (Fraction(0),) * n
    ineqs = [Constraint(u, _dot(u, shift)) for u in c.facet_normals]
    eqs = [(e, _dot(e, shift)) for e in c.equations]
    return ineqs, eqs


@dataclass(frozen=True)
class DisplacedIntersection:
    nonempty: bool
    dim: int | None


def intersect_displaced(sigma: Cone, tau: Cone, v: Sequence) -> DisplacedIntersection:
    """Emptiness and dimension of ``sigma ∩ (tau + v)``."""
    if sigma.lattice != tau.lattice:
        raise ValueError("cones live in different lattices")
    n = sigma.lattice.rank
    v = tuple(Fraction(x) for x in v)
    i1, e1 = _in_cone_constraints(sigma)
    i2, e2 = _in_cone_constraints(tau, v)
    dim = affine_hull_dimension(i1 + i2, e1 + e2, nvars=n)
    return DisplacedIntersection(dim is not None, dim)


def normal_lattice_vector(tau: Cone, sigma: Cone) -> tuple:
    """Lattice point of sigma whose class generates N_sigma / N_tau ≅ Z."""
    if sigma.dim != tau.dim + 1 or not tau.is_face_of(sigma):
        raise NotAFacetPair(f"{tau} is not a facet of {sigma}")
    u = next(u for u in sigma.facet_normals if all(_dot(u, r) == 0 for r in tau.rays))
    basis = sigma.span_lattice()
    g, coeffs = xgcd_list([_dot(u, b) for b in basis])
    n = sigma.lattice.rank
    v = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(n)]
    if tau.rays:
        # push v into sigma along the relative interior of tau
        w = [sum(r[i] for r in tau.rays) for i in range(n)]
        t = 0
        for f in sigma.facet_normals:
            fw = _dot(f, w)
            if fw > 0:
                t = max(t, -(_dot(f, v) // fw))
        v = [a + t * b for a, b in zip(v, w)]
    assert sigma.contains(v)
    return tuple(v)


@dataclass(frozen=True)
class ConeSplit:
    reduced_cone: Cone
    torus_rank: int
    change_of_basis: IntMatrix

    def to_dict(self) -> dict:
        return {
            "torus_rank": self.torus_rank,
            "reduced_rank": self.reduced_cone.lattice.rank,
            "reduced_rays": [list(r) for r in self.reduced_cone.rays],
            "change_of_basis": self.change_of_basis.tolist(),
        }


def split_affine(c: Cone) -> ConeSplit:
    """Write N = N_1 ⊕ N_2 with sigma full-dimensional in N_1 = span ∩ N.

    ``change_of_basis`` maps N to coordinates in which every generator of
    sigma has zeros past position ``dim sigma``.
    """
    n = c.lattice.rank
    d = c.dim
    B = c.span_lattice()
    if not B:
        return ConeSplit(zero_cone(Lattice(0)), n, IntMatrix.identity(n))
    smith = snf(IntMatrix.from_columns(B, rows=n))
    U = smith.U
    images = [U.apply(r) for r in c.rays]
    assert all(not any(img[d:]) for img in images)
    reduced = cone_from_generators(Lattice(d), [img[:d] for img in images])
    return ConeSplit(reduced, n - d, U)


def _order_key(idx):
    return tuple(idx)


@dataclass(frozen=True, eq=False)
class Fan:
    """Face-closed, intersection-compatible collection of cones.

    ``cones`` holds every cone as a sorted tuple of indices into ``rays``,
    in canonical order (sorted ray-index tuples, () is the zero cone).
    """

    lattice: Lattice
    rays: tuple
    cones: tuple
    is_complete: bool
    is_affine: bool
    is_smooth: bool
    name: str | None = None
    _objects: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.lattice.rank

    def cone(self, idx) -> Cone:
        idx = tuple(idx)
        c = self._objects.get(idx)
        if c is None:
            c = cone_from_generators(self.lattice, [self.rays[i] for i in idx])
            self._objects[idx] = c
        return c

    def index_of(self, c: Cone) -> tuple:
        try:
            return tuple(sorted(self.rays.index(r) for r in c.rays))
        except ValueError:
            raise KeyError(f"{c} is not a cone of this fan") from None

    def cones_of_dim(self, d: int) -> list:
        return [self.cone(i) for i in self.indices_of_dim(d)]

    def indices_of_dim(self, d: int) -> list:
        return [i for i in self.cones if self.cone(i).dim == d]

    def star(self, tau) -> list:
        t = set(tau if isinstance(tau, tuple) else self.index_of(tau))
        return [self.cone(i) for i in self.cones if t <= set(i)]

    def star_indices(self, tau_idx) -> list:
        t = set(tau_idx)
        return [i for i in self.cones if t <= set(i)]

    def maximal_cones(self) -> list:
        sets = [set(i) for i in self.cones]
        return [i for i, s in zip(self.cones, sets) if not any(s < o for o in sets)]

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return (self.lattice, self.rays, self.cones) == (other.lattice, other.rays, other.cones)

    def __hash__(self):
        return hash((self.lattice, self.rays, self.cones))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Fan{label} in Z^{self.dim}: {len(self.rays)} rays, {len(self.cones)} cones>"


def _meet_violation(s: Cone, t: Cone) -> str | None:
    """Reason why ``s ∩ t`` is not a common face, or None."""
    shared = sorted(set(s.rays) & set(t.rays))
    gamma = cone_from_generators(s.lattice, shared)
    if not gamma.is_face_of(s) or not gamma.is_face_of(t):
        return "shared rays do not span a common face"
    i1, e1 = _in_cone_constraints(s)
    i2, e2 = _in_cone_constraints(t)
    n = s.lattice.rank
    for u in s.facet_normals:
        if all(_dot(u, r) == 0 for r in shared):
            if is_feasible(i1 + i2 + [Constraint(u, 0, True)], e1 + e2, nvars=n):
                return "cones overlap beyond their common face"
    return None


def fan_from_maximal_cones(
    lattice,
    maximal_cones: Iterable[Iterable[Sequence[int]]],
    rays: Sequence[Sequence[int]] | None = None,
    name: str | None = None,
) -> Fan:
    """Build and validate a fan from generator lists of its maximal cones.

    Rays are sorted lexicographically unless an explicit ``rays`` order is
    supplied; every supplied ray must be a ray of some cone.
    """
    lattice = _as_lattice(lattice)
    tops = [cone_from_generators(lattice, gens) for gens in maximal_cones]
    used = sorted({r for c in tops for r in c.rays})
    if rays is None:
        ray_list = used
    else:
        ray_list = [primitive(r) for r in rays]
        if len(set(ray_list)) != len(ray_list):
            raise InvalidFan("duplicate rays after primitive normalization")
        missing = set(used) - set(ray_list)
        if missing:
            raise InvalidFan(f"cone rays {sorted(missing)} missing from the ray list")
        unused = set(ray_list) - set(used)
        if unused:
            raise InvalidFan(f"rays {sorted(unused)} are not rays of any cone")
    ray_list = tuple(tuple(r) for r in ray_list)
    pos = {r: i for i, r in enumerate(ray_list)}

    uniq = {}
    for c in tops:
        uniq.setdefault(c.rays, c)
    tops = list(uniq.values())
    for a, b in itertools.combinations(tops, 2):
        why = _meet_violation(a, b)
        if why:
            raise InvalidFan(f"invalid fan: {why}: {a} and {b}", pair=(a, b))

    objects = {}
    for c in tops:
        for f in faces(c):
            idx = tuple(sorted(pos[r] for r in f.rays))
            objects.setdefault(idx, f)
    if not tops:
        objects[()] = zero_cone(lattice)
    cones = tuple(sorted(objects, key=_order_key))

    n = lattice.rank
    top_sets = [set(i) for i in cones]
    maximal = [objects[i] for i, s in zip(cones, top_sets) if not any(s < o for o in top_sets)]
    is_affine = len(maximal) == 1
    full = [c for c in maximal if c.dim == n]
    is_complete = bool(maximal) and len(full) == len(maximal)
    if is_complete and n > 0:
        walls = [i for i in cones if objects[i].dim == n - 1]
        for w in walls:
            count = sum(1 for c in full if set(w) <= {pos[r] for r in c.rays})
            if count != 2:
                is_complete = False
                break
    is_smooth = all(c.is_smooth() for c in maximal)
    return Fan(lattice, ray_list, cones, is_complete, is_affine, is_smooth, name, objects)


def affine_fan(c: Cone, name: str | None = None) -> Fan:
    return fan_from_maximal_cones(c.lattice, [c.rays], name=name)


def cones_of_dim(f: Fan, d: int) -> list:
    return f.cones_of_dim(d)


def star(f: Fan, tau: Cone) -> list:
    return f.star(tau)


def is_complete(f: Fan) -> bool:
    return f.is_complete


def check_split(c: Cone, split: ConeSplit) -> bool:
    """Existence-level invariants of a ConeSplit."""
    n = c.lattice.rank
    d = split.reduced_cone.lattice.rank
    if not is_unimodular(split.change_of_basis):
        return False
    if split.torus_rank + d != n or not split.reduced_cone.is_full_dimensional:
        return False
    images = sorted(primitive(split.change_of_basis.apply(r)[:d]) for r in c.rays) if d else []
    if any(any(split.change_of_basis.apply(r)[d:]) for r in c.rays):
        return False
    return tuple(images) == split.reduced_cone.rays
