"""Text formats for sequences, Gaussian sequences and pair sequences.

Integers are always written as decimal strings so arbitrarily large values
survive a round trip.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidParameter
from .gaussian import GaussianElement
from .pairs import PairElement


def _lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def _int(token: str) -> int:
    try:
        return int(token.strip())
    except ValueError:
        raise InvalidParameter(f"not a decimal integer: {token!r}") from None


def parse_sequence(text: str) -> tuple[list[int], int | None]:
    """Return ``(values, modulus)``; modulus is None for the plain line format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InvalidParameter(f"bad JSON sequence: {exc}") from None
        if "elements" not in doc:
            raise InvalidParameter("JSON sequence needs an 'elements' key")
        modulus = _int(str(doc["modulus"])) if doc.get("modulus") is not None else None
        return [_int(str(v)) for v in doc["elements"]], modulus
    return [_int(line) for line in _lines(text)], None


def format_sequence(values, modulus: int | None = None, *, as_json: bool = False) -> str:
    values = [int(v) for v in values]
    if as_json:
        doc = {"elements": [str(v) for v in values]}
        if modulus is not None:
            doc = {"modulus": str(modulus), **doc}
        return json.dumps(doc) + "\n"
    return "".join(f"{v}\n" for v in values)


def _parse_two(text: str) -> list[tuple[int, int]]:
    out = []
    for line in _lines(text):
        parts = line.split(",")
        if len(parts) != 2:
            raise InvalidParameter(f"expected 'a,b', got {line!r}")
        out.append((_int(parts[0]), _int(parts[1])))
    return out


def parse_gaussian(text: str) -> list[GaussianElement]:
    return [GaussianElement(a, b) for a, b in _parse_two(text)]


def format_gaussian(values) -> str:
    return "".join(f"{v.re},{v.im}\n" for v in values)


def parse_pairs(text: str) -> list[PairElement]:
    return [PairElement(a, b) for a, b in _parse_two(text)]


def format_pairs(values) -> str:
    return "".join(f"{v.first},{v.second}\n" for v in values)


def read_sequence(path) -> tuple[list[int], int | None]:
    return parse_sequence(Path(path).read_text())


def read_gaussian(path) -> list[GaussianElement]:
    return parse_gaussian(Path(path).read_text())


def read_pairs(path) -> list[PairElement]:
    return parse_pairs(Path(path).read_text())
