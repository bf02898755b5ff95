"""Plain-text poset files.

::

    # comment lines start with '#'
    poset 5
    1 3
    2 4

The header gives the element count; each body line is a 1-indexed pair
``i j`` meaning ``i`` lies below ``j``.  Any relation pairs are accepted on
input; output always lists the sorted cover pairs only.
"""

from __future__ import annotations

from pathlib import Path

from .errors import CycleError, ParseError
from .poset import Poset, covers, poset_from_covers


def parse_poset(text: str) -> Poset:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "poset" or not fields[1].isdigit():
                raise ParseError(f"line {lineno}: expected 'poset N' header, got {raw!r}")
            n = int(fields[1])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise ParseError(f"line {lineno}: expected 'i j', got {raw!r}")
        i, j = (int(f) for f in fields)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"line {lineno}: element out of range 1..{n}")
        if i == j:
            raise ParseError(f"line {lineno}: an element cannot lie below itself")
        pairs.append((i - 1, j - 1))
    if n is None:
        raise ParseError("missing 'poset N' header")
    try:
        return poset_from_covers(n, pairs)
    except CycleError as exc:
        raise ParseError(f"relation is cyclic: {exc}") from None


def read_poset(path: str | Path) -> Poset:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_poset(text)


def format_poset(p: Poset, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"poset {p.n}")
    lines.extend(f"{i + 1} {j + 1}" for i, j in covers(p))
    return "\n".join(lines) + "\n"
