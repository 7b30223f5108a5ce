"""JSON conversion for parts, partitions and machine traces."""
from __future__ import annotations

import json
from pathlib import Path

from .colors import canonical_name, check_palette, pretty_name
from .errors import InputError
from .parts import Part, make_part, parse_part
from .colors import parse_color


def part_to_json(x: Part, pretty: bool = False) -> dict:
    name = pretty_name(x.color) if pretty else canonical_name(x.color)
    return {"size": x.size, "color": name}


def parts_to_json(parts, pretty: bool = False) -> list:
    return [part_to_json(x, pretty) for x in parts]


def part_from_json(obj, n: int) -> Part:
    if isinstance(obj, str):
        return parse_part(obj, n)
    if not isinstance(obj, dict) or set(obj) != {"size", "color"}:
        raise InputError(f"a part is {{'size': k, 'color': name}} or 'k[name]', got {obj!r}")
    return make_part(obj["size"], parse_color(obj["color"], n))


def parts_from_json(doc, n: int | None = None) -> tuple[tuple, int]:
    """Accept ``{"colors": n, "parts": [...]}`` or a bare list (then n is required)."""
    if isinstance(doc, dict):
        if "parts" not in doc:
            raise InputError("input object needs a 'parts' list")
        if "colors" in doc:
            if n is not None and n != doc["colors"]:
                raise InputError(f"--colors {n} contradicts colors={doc['colors']} in the input")
            n = doc["colors"]
        doc = doc["parts"]
    if n is None:
        raise InputError("number of colors unknown: pass --colors or include 'colors' in the input")
    check_palette(n)
    if not isinstance(doc, list):
        raise InputError("parts must be a list")
    return tuple(part_from_json(o, n) for o in doc), n


def load_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None


def dump_json(obj, path=None, pretty: bool = False) -> str:
    text = json.dumps(obj, indent=2 if pretty else None, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def trace_to_json(tr, pretty: bool = False) -> dict:
    enc = lambda seq: parts_to_json(seq, pretty)
    out = {
        "machine": tr.machine,
        "source": enc(tr.source),
        "result": enc(tr.result),
        "counts": tr.counts(),
        "events": [{"kind": e.kind, "index": e.index, "detail": list(e.detail)} for e in tr.events],
        "triplets": [{"head": enc(t.head), "middle": enc(t.middle), "tail": enc(t.tail)}
                     for t in tr.triplets],
    }
    if tr.machine == "psi":
        out["theta"] = list(tr.theta[1:-1])
    return out


def load_schema(name: str) -> dict:
    """One of the JSON schemas shipped with the package, e.g. ``"bridge"``."""
    from importlib import resources
    try:
        text = resources.files(__package__).joinpath("schemas", f"{name}.json").read_text()
    except FileNotFoundError:
        raise InputError(f"no schema named {name!r}") from None
    return json.loads(text)
