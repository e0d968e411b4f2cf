"""
Fan files: UTF-8 JSON objects of the form

    {
      "name": "square cone",            (optional)
      "lattice_rank": 3,
      "rays": [[1, 0, 1], [0, -1, 1], [-1, 0, 1], [0, 1, 1]],
      "maximal_cones": [[0, 1, 2, 3]]
    }

Integers too large for 64 bits may be written as decimal strings. Only the
maximal cones are listed; the face closure is always recomputed and
validated. Non-primitive rays are accepted with a warning and divided by the
gcd of their coordinates.
"""

from __future__ import annotations

import json
import math
import warnings
from pathlib import Path

from .errors import ParseError, ValidationError
from .polyhedra import Fan, fan_from_maximal_cones


class FanNormalizationWarning(UserWarning):
    pass


def _int(value, field):
    if isinstance(value, bool):
        raise ParseError("expected an integer, got a boolean", field=field)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            raise ParseError(f"cannot read {value!r} as an integer", field=field) from None
    raise ParseError(f"expected an integer, got {type(value).__name__}", field=field)


def parse_fan_text(text: str, source: str = "<string>") -> Fan:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: malformed JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(data, dict):
        raise ParseError(f"{source}: top level must be an object")
    for key in ("lattice_rank", "rays", "maximal_cones"):
        if key not in data:
            raise ParseError(f"{source}: missing required field", field=key)
    unknown = set(data) - {"lattice_rank", "rays", "maximal_cones", "name"}
    if unknown:
        raise ParseError(f"{source}: unknown fields {sorted(unknown)}", field=sorted(unknown)[0])

    n = _int(data["lattice_rank"], "lattice_rank")
    if n < 0:
        raise ParseError("lattice rank must be nonnegative", field="lattice_rank")
    if not isinstance(data["rays"], list):
        raise ParseError("rays must be a list", field="rays")
    rays = []
    for i, r in enumerate(data["rays"]):
        label = f"rays[{i}]"
        if not isinstance(r, list) or len(r) != n:
            raise ParseError(f"ray must be a list of {n} integers", field=label)
        r = tuple(_int(x, label) for x in r)
        g = math.gcd(*r)
        if g == 0:
            raise ParseError("zero ray", field=label)
        if g > 1:
            prim = tuple(x // g for x in r)
            warnings.warn(
                f"{label} = {list(r)} is not primitive; stored as {list(prim)}",
                FanNormalizationWarning,
                stacklevel=2,
            )
            r = prim
        rays.append(r)

    if not isinstance(data["maximal_cones"], list):
        raise ParseError("maximal_cones must be a list", field="maximal_cones")
    tops = []
    for i, c in enumerate(data["maximal_cones"]):
        label = f"maximal_cones[{i}]"
        if not isinstance(c, list):
            raise ParseError("cone must be a list of ray indices", field=label)
        idx = [_int(x, label) for x in c]
        for j in idx:
            if not 0 <= j < len(rays):
                raise ParseError(f"ray index {j} out of range", field=label)
        tops.append([rays[j] for j in idx])

    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name must be a string", field="name")
    try:
        return fan_from_maximal_cones(n, tops, rays=rays, name=name)
    except ValidationError:
        raise
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


def parse_fan(path) -> Fan:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not UTF-8") from None
    return parse_fan_text(text, source=str(path))


def fan_to_dict(fan: Fan) -> dict:
    """Canonical file form: maximal cones as sorted ray-index lists, sorted."""
    def num(x):
        return x if abs(x) < 2**63 else str(x)

    out = {
        "lattice_rank": fan.dim,
        "rays": [[num(x) for x in r] for r in fan.rays],
        "maximal_cones": sorted(list(c) for c in fan.maximal_cones()),
    }
    if fan.name is not None:
        out["name"] = fan.name
    return out


def dumps_fan(fan: Fan) -> str:
    """Canonical text of a fan file, one ray or cone per line."""
    d = fan_to_dict(fan)
    lines = ["{"]
    if "name" in d:
        lines.append(f'  "name": {json.dumps(d["name"], ensure_ascii=False)},')
    lines.append(f'  "lattice_rank": {d["lattice_rank"]},')
    for key in ("rays", "maximal_cones"):
        items = [json.dumps(x) for x in d[key]]
        if items:
            body = ",\n".join("    " + x for x in items)
            lines.append(f'  "{key}": [\n{body}\n  ]' + ("," if key == "rays" else ""))
        else:
            lines.append(f'  "{key}": []' + ("," if key == "rays" else ""))
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_fan(fan: Fan, path) -> None:
    Path(path).write_text(dumps_fan(fan), encoding="utf-8")


def emit_report(report, fmt: str = "text") -> str:
    """Render any report object exposing ``to_dict`` / ``to_text``."""
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)
    if fmt == "text":
        return report.to_text()
    raise ValueError(f"unknown format {fmt!r}")
