"""Reading and writing complexes in the JSON faces format."""

from __future__ import annotations

import json
from pathlib import Path

from ..core import EvenComplex, build_complex


class ParseError(ValueError):
    """Malformed complex file; the message names the line or field at fault."""


def parse(text: str, source: str = "<string>") -> EvenComplex:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise ParseError(f"{source}: top level must be an object")
    if "faces" not in obj:
        raise ParseError(f"{source}: missing key 'faces'")
    faces = obj["faces"]
    if not isinstance(faces, list):
        raise ParseError(f"{source}: 'faces' must be an array")
    for i, face in enumerate(faces):
        if not isinstance(face, list):
            raise ParseError(f"{source}: faces[{i}] must be an array")
        for j, v in enumerate(face):
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ParseError(f"{source}: faces[{i}][{j}] must be a nonnegative integer, got {v!r}")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError(f"{source}: 'name' must be a string")
    return build_complex(faces, name=name)


def load(path: str | Path) -> EvenComplex:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
    return parse(text, str(path))


def dumps(X: EvenComplex) -> str:
    """Deterministic text: normalised faces, one per line."""
    lines = ["{"]
    if X.name is not None:
        lines.append(f'  "name": {json.dumps(X.name)},')
    faces = X.normalized_faces()
    lines.append('  "faces": [')
    for i, f in enumerate(faces):
        sep = "," if i + 1 < len(faces) else ""
        lines.append("    " + json.dumps(f) + sep)
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def save(X: EvenComplex, path: str | Path) -> None:
    Path(path).write_text(dumps(X))
