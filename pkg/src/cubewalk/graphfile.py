"""Plain-text graph files.

    # comment
    n 3
    001 4
    011 8
    101 3

The first non-comment line declares the dimension; every other line is a
bit string and a non-zero integer weight.
"""

from __future__ import annotations

from pathlib import Path

from .group import MAX_DIMENSION, GroupElement, MalformedInputError, WeightFunction


class GraphSpecError(MalformedInputError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_graph_spec(text: str) -> WeightFunction:
    n = None
    entries: dict[GroupElement, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise GraphSpecError(lineno, "expected header 'n <dimension>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphSpecError(lineno, f"bad dimension {fields[1]!r}") from None
            if not 1 <= n <= MAX_DIMENSION:
                raise GraphSpecError(lineno, f"dimension must be in 1..{MAX_DIMENSION}")
            continue
        if len(fields) != 2:
            raise GraphSpecError(lineno, "expected '<bitstring> <weight>'")
        bits, weight = fields
        if len(bits) != n or set(bits) - {"0", "1"}:
            raise GraphSpecError(lineno, f"{bits!r} is not a {n}-character bit string")
        try:
            w = int(weight)
        except ValueError:
            raise GraphSpecError(lineno, f"weight {weight!r} is not an integer") from None
        x = GroupElement.from_str(bits)
        if x.is_identity():
            raise GraphSpecError(lineno, "loop weight not allowed")
        if w == 0:
            raise GraphSpecError(lineno, "weights must be non-zero")
        if x in entries:
            raise GraphSpecError(lineno, f"duplicate entry {bits}")
        entries[x] = w
    if n is None:
        raise GraphSpecError(1, "missing header 'n <dimension>'")
    return WeightFunction(n, entries)


def format_graph_spec(f: WeightFunction) -> str:
    lines = [f"n {f.n}"]
    lines.extend(f"{x} {w}" for x, w in f.entries.items())
    return "\n".join(lines) + "\n"


def load_graph(path: str | Path) -> WeightFunction:
    return parse_graph_spec(Path(path).read_text())
