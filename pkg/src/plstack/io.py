"""JSON file formats for complexes, schedules and presentations.

Complex:      {"name": str, "facets": [[int, ...], ...]}
Schedule:     {"floor_dim": int, "steps": [{"face": [int, ...], "apex": int | null}, ...]}
Presentation: {"generators": ["a", "b"], "relators": ["aa", "bbb", "ababababab"]}
"""
from __future__ import annotations

import json
from pathlib import Path

from .cobordism import SubdivisionSchedule
from .complex import SimplicialComplex
from .errors import ParseError, PLStackError
from .presentations import GroupPresentation


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, compact separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _load_json(source) -> object:
    if isinstance(source, (dict, list)):
        return source
    text = Path(source).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _int_list(value, where: str) -> list[int]:
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected a list of integers")
    for j, v in enumerate(value):
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ParseError(f"{where}[{j}]: expected a non-negative integer, got {v!r}")
    return value


def parse_complex(data) -> SimplicialComplex:
    if not isinstance(data, dict):
        raise ParseError("complex file must hold a JSON object")
    if "facets" not in data:
        raise ParseError("missing field 'facets'")
    raw = data["facets"]
    if not isinstance(raw, list):
        raise ParseError("facets: expected a list")
    seen = {}
    for i, f in enumerate(raw):
        vs = _int_list(f, f"facets[{i}]")
        key = tuple(sorted(vs))
        if len(set(key)) != len(key):
            raise ParseError(f"facets[{i}]: repeated vertex")
        if key in seen:
            raise ParseError(f"facets[{i}]: duplicate of facets[{seen[key]}]")
        seen[key] = i
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name: expected a string")
    return SimplicialComplex(seen, name=name)


def load_complex(path) -> SimplicialComplex:
    return parse_complex(_load_json(path))


def complex_to_dict(X: SimplicialComplex) -> dict:
    return {"facets": [list(f) for f in X.sorted_facets()], "name": X.name or ""}


def save_complex(X: SimplicialComplex, path) -> None:
    Path(path).write_text(dumps(complex_to_dict(X)))


def parse_schedule(data) -> SubdivisionSchedule:
    if not isinstance(data, dict):
        raise ParseError("schedule file must hold a JSON object")
    floor = data.get("floor_dim", 1)
    if isinstance(floor, bool) or not isinstance(floor, int):
        raise ParseError("floor_dim: expected an integer")
    steps = data.get("steps")
    if not isinstance(steps, list):
        raise ParseError("steps: expected a list")
    parsed = []
    for i, s in enumerate(steps):
        if not isinstance(s, dict) or "face" not in s:
            raise ParseError(f"steps[{i}]: expected an object with a 'face' field")
        face = _int_list(s["face"], f"steps[{i}].face")
        apex = s.get("apex")
        if apex is not None and (isinstance(apex, bool) or not isinstance(apex, int) or apex < 0):
            raise ParseError(f"steps[{i}].apex: expected a non-negative integer or null")
        parsed.append((face, apex))
    try:
        return SubdivisionSchedule(tuple(parsed), floor)
    except (ValueError, PLStackError) as exc:
        raise ParseError(str(exc)) from exc


def load_schedule(path) -> SubdivisionSchedule:
    return parse_schedule(_load_json(path))


def parse_presentation(data) -> GroupPresentation:
    if not isinstance(data, dict):
        raise ParseError("presentation file must hold a JSON object")
    gens = data.get("generators", [])
    rels = data.get("relators", [])
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise ParseError("generators: expected a list of strings")
    if not isinstance(rels, list):
        raise ParseError("relators: expected a list of strings")
    for i, r in enumerate(rels):
        if not isinstance(r, str):
            raise ParseError(f"relators[{i}]: expected a string")
    return GroupPresentation(tuple(gens), tuple(rels))


def load_presentation(path) -> GroupPresentation:
    return parse_presentation(_load_json(path))
