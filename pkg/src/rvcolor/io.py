"""Edge-list and coloring file formats.

Edge list::

    # comments and blank lines are ignored
    n m
    u v        (exactly m lines, 0 <= u, v < n, u != v, no duplicates)

Coloring: ``n`` lines ``vertexId colorId`` with ``colorId >= 0``.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .errors import InvalidArgumentError
from .graph import Graph


def _content_lines(lines: Iterable[str]) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        yield lineno, line.split()


def _ints(lineno: int, parts: list[str], count: int) -> list[int]:
    if len(parts) != count:
        raise InvalidArgumentError(f"line {lineno}: expected {count} integers, got {len(parts)}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InvalidArgumentError(f"line {lineno}: non-integer token") from None


def parse_edgelist(lines: Iterable[str]) -> Graph:
    rows = _content_lines(lines)
    try:
        lineno, parts = next(rows)
    except StopIteration:
        raise InvalidArgumentError("missing 'n m' header") from None
    n, m = _ints(lineno, parts, 2)
    if n < 0 or m < 0:
        raise InvalidArgumentError("n and m must be non-negative")
    edges = []
    seen = set()
    for lineno, parts in rows:
        u, v = _ints(lineno, parts, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidArgumentError(f"line {lineno}: vertex out of range")
        if u == v:
            raise InvalidArgumentError(f"line {lineno}: self-loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InvalidArgumentError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise InvalidArgumentError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edgelist(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edgelist(fh)


def write_edgelist(g: Graph, path) -> None:
    Path(path).write_text(format_edgelist(g), encoding="utf-8")


def parse_coloring(lines: Iterable[str], n: int | None = None) -> list[int]:
    colors: dict[int, int] = {}
    for lineno, parts in _content_lines(lines):
        v, c = _ints(lineno, parts, 2)
        if v < 0 or c < 0:
            raise InvalidArgumentError(f"line {lineno}: ids must be non-negative")
        if v in colors:
            raise InvalidArgumentError(f"line {lineno}: vertex {v} colored twice")
        colors[v] = c
    size = len(colors) if n is None else n
    if sorted(colors) != list(range(size)):
        raise InvalidArgumentError(f"coloring must cover exactly vertices 0..{size - 1}")
    return [colors[v] for v in range(size)]


def format_coloring(colors: Mapping[int, int] | list[int]) -> str:
    items = enumerate(colors) if isinstance(colors, list) else sorted(colors.items())
    return "".join(f"{v} {c}\n" for v, c in items)


def read_coloring(path, n: int | None = None) -> list[int]:
    with open(path, encoding="utf-8") as fh:
        return parse_coloring(fh, n)


def write_coloring(colors, path) -> None:
    Path(path).write_text(format_coloring(list(colors)), encoding="utf-8")

