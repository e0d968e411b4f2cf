"""
Dispatch of operational Chow cohomology by the shape of the fan.

* affine fans: the coordinate ring of X(sigma) is nonnegatively graded with
  degree-0 part the coordinate ring of a torus T_0, so every A^1-homotopy
  invariant functor takes the same value on X and on T_0. Hence
  A^0 = Z, A^k_op = 0 for k >= 1, and op K^0 = Z.
* complete fans: A^k_op is the group of codim-k Minkowski weights.
* anything else: only A^0 = Z is reported.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .chow import chow_group, chow_presentation, hom_to_Z
from .errors import NotAffine
from .intlinalg import ZERO_GROUP, AbelianGroup, Z
from .minkowski import MAX_RETRIES, duality_report, structure_constants, weight_group
from .polyhedra import Fan, split_affine


class Provenance(str, enum.Enum):
    CONE_THEOREM = "CONE_THEOREM"
    MINKOWSKI = "MINKOWSKI"
    UNSUPPORTED = "UNSUPPORTED"


@dataclass(frozen=True)
class DegreeEntry:
    k: int
    group: AbelianGroup | None
    provenance: Provenance

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "group": None if self.group is None else str(self.group),
            "free_rank": None if self.group is None else self.group.free_rank,
            "torsion": None if self.group is None else list(self.group.torsion),
            "provenance": self.provenance.value,
        }


@dataclass
class CohomologyReport:
    fan_name: str | None
    lattice_rank: int
    regime: str
    entries: list
    torus_rank: int | None = None
    equivariant: str | None = None
    equivariant_k: str | None = None
    opK: str | None = None
    duality: list = field(default_factory=list)
    ring: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "fan": self.fan_name,
            "lattice_rank": self.lattice_rank,
            "regime": self.regime,
            "degrees": [e.to_dict() for e in self.entries],
            "torus_rank": self.torus_rank,
            "equivariant_chow": self.equivariant,
            "equivariant_opK": self.equivariant_k,
            "opK": self.opK,
            "duality": self.duality,
            "ring": self.ring,
        }

    def to_text(self) -> str:
        lines = [f"fan: {self.fan_name or '(unnamed)'} in Z^{self.lattice_rank} [{self.regime}]"]
        for e in self.entries:
            g = "?" if e.group is None else str(e.group)
            lines.append(f"  A^{e.k}_op = {g}   ({e.provenance.value})")
        if self.torus_rank is not None:
            lines.append(f"  torus rank of the split: {self.torus_rank}")
        if self.opK is not None:
            lines.append(f"  op K^0 = {self.opK}")
        if self.equivariant is not None:
            lines.append(f"  A^*_op,T = {self.equivariant};  op K^0_T = {self.equivariant_k}")
        for d in self.duality:
            flag = "" if d["agrees"] else "   <-- duality fails"
            lines.append(f"  Hom(A_{d['k']}, Z) = {d['hom_to_Z']}  vs  A^{d['k']}_op = {d['operational']}{flag}")
        for r in self.ring:
            lines.append(f"  cup codim {r['k']} x {r['l']}: {r['constants']}")
        return "\n".join(lines)

    @property
    def unsupported(self) -> bool:
        return any(e.provenance is Provenance.UNSUPPORTED for e in self.entries)


def _duality_row(k, chow, op):
    hom = hom_to_Z(chow)
    return {
        "k": k,
        "chow_group": str(chow),
        "hom_to_Z": str(hom),
        "operational": str(op),
        "agrees": hom == op,
    }


def cohomology(fan: Fan, seed: int = 0, max_retries: int = MAX_RETRIES, ring: bool = True) -> CohomologyReport:
    """Per-degree operational Chow cohomology with the route used to get it.

    For complete fans with ``ring`` set, the cup-product structure constants
    on weight bases are included for every pair of positive codims.
    """
    n = fan.dim
    if fan.is_affine:
        (top,) = fan.maximal_cones()
        split = split_affine(fan.cone(top))
        entries = [DegreeEntry(0, Z, Provenance.CONE_THEOREM)] + [
            DegreeEntry(k, ZERO_GROUP, Provenance.CONE_THEOREM) for k in range(1, n + 1)
        ]
        report = CohomologyReport(fan.name, n, "affine", entries, torus_rank=split.torus_rank, opK="Z")
        if split.torus_rank == 0:
            report.equivariant = f"Sym(X(T)), polynomial ring on a character lattice of rank {n}"
            report.equivariant_k = f"R(T), representation ring of a rank-{n} torus"
        report.duality = [_duality_row(e.k, chow_group(fan, e.k), e.group) for e in entries]
        return report

    if fan.is_complete:
        entries = [
            DegreeEntry(k, AbelianGroup(len(weight_group(fan, k))), Provenance.MINKOWSKI)
            for k in range(n + 1)
        ]
        report = CohomologyReport(fan.name, n, "complete", entries)
        report.duality = [
            dict(duality_report(fan, k).to_dict(), operational=str(e.group)) for k, e in enumerate(entries)
        ]
        if ring:
            for k in range(1, n + 1):
                for l in range(k, n + 1 - k):
                    consts = structure_constants(fan, k, l, seed, max_retries)
                    report.ring.append(
                        {
                            "k": k,
                            "l": l,
                            "constants": {f"{i},{j}": list(c) for (i, j), c in sorted(consts.items())},
                        }
                    )
        return report

    # A^0 = Z holds for every variety, but no route computes anything above it
    entries = [DegreeEntry(0, Z, Provenance.UNSUPPORTED)] + [
        DegreeEntry(k, None, Provenance.UNSUPPORTED) for k in range(1, n + 1)
    ]
    return CohomologyReport(fan.name, n, "neither affine nor complete", entries)


@dataclass(frozen=True)
class DualityFailure:
    k: int
    chow: AbelianGroup
    hom: AbelianGroup
    operational: AbelianGroup

    @property
    def disagree(self) -> bool:
        return self.hom != self.operational

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "chow_group": str(self.chow),
            "hom_to_Z": str(self.hom),
            "operational": str(self.operational),
            "disagree": self.disagree,
        }

    def to_text(self) -> str:
        line = (
            f"A_{self.k} = {self.chow};  Hom(A_{self.k}, Z) = {self.hom}  vs  "
            f"A^{self.k}_op = {self.operational}"
        )
        if self.disagree:
            line += "   <-- Hom(A_k, Z) != A^k_op: duality fails on this non-complete variety"
        return line


def duality_failure_demo(fan: Fan, k: int) -> DualityFailure:
    """Set Hom(A_k, Z) beside the cone-theorem value of A^k_op on an affine fan."""
    if not fan.is_affine:
        raise NotAffine("the cone-theorem comparison needs an affine fan")
    p = chow_presentation(fan, k)
    chow = chow_group(fan, k)
    hom = hom_to_Z(p)
    assert hom == hom_to_Z(chow)
    return DualityFailure(k, chow, hom, Z if k == 0 else ZERO_GROUP)
