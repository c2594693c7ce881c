"""Line-oriented instance and solution files (1-based ids on disk).

Graph::

    c optional comment
    p graph <n> <m>
    e <u> <v>            (m lines)

Set system::

    p setsystem <n> <m>
    s <k> <a_1> ... <a_k>    (m lines, set order is significant)

Solutions are one line of space-separated ids. Canonical serialization
sorts graph edges by (min endpoint, max endpoint) and elements within each
set; a trailing newline ends every file.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Union

from .errors import InputError, ParseError
from .model import Graph, SetSystem


@dataclass(frozen=True)
class InstanceFile:
    kind: str
    payload: Union[Graph, SetSystem]
    path: str | None = None


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        yield lineno, parts


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(parts)!r}", lineno) from None


def _header(lines, kind: str) -> tuple[int, int, int]:
    try:
        lineno, parts = next(lines)
    except StopIteration:
        raise ParseError(f"missing 'p {kind}' header") from None
    if len(parts) != 4 or parts[0] != "p" or parts[1] != kind:
        raise ParseError(f"expected 'p {kind} <n> <m>', got {' '.join(parts)!r}", lineno)
    n, m = _ints(parts[2:], lineno)
    if n < 0 or m < 0:
        raise ParseError("counts must be non-negative", lineno)
    return lineno, n, m


def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    hline, n, m = _header(lines, "graph")
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, parts in lines:
        if parts[0] != "e" or len(parts) != 3:
            raise ParseError(f"expected 'e <u> <v>', got {' '.join(parts)!r}", lineno)
        u, v = _ints(parts[1:], lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex id out of range 1..{n}", lineno)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", lineno)
        pair = (min(u, v) - 1, max(u, v) - 1)
        if pair in seen:
            raise ParseError(f"duplicate edge {u} {v} (first on line {seen[pair]})", lineno)
        seen[pair] = lineno
        edges.append(pair)
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", hline)
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    out = [f"p graph {g.n} {g.m}"]
    out += [f"e {u + 1} {v + 1}" for u, v in sorted(g.edges)]
    return "\n".join(out) + "\n"


def parse_setsystem(text: str) -> SetSystem:
    lines = _lines(text)
    hline, n, m = _header(lines, "setsystem")
    sets: list[tuple[int, ...]] = []
    for lineno, parts in lines:
        if parts[0] != "s" or len(parts) < 2:
            raise ParseError(f"expected 's <k> <elements...>', got {' '.join(parts)!r}", lineno)
        nums = _ints(parts[1:], lineno)
        k, elems = nums[0], nums[1:]
        if k != len(elems):
            raise ParseError(f"set declares {k} elements, lists {len(elems)}", lineno)
        for a in elems:
            if not 1 <= a <= n:
                raise ParseError(f"element {a} out of range 1..{n}", lineno)
        if len(set(elems)) != len(elems):
            raise ParseError("duplicate element within a set", lineno)
        sets.append(tuple(a - 1 for a in elems))
    if len(sets) != m:
        raise ParseError(f"header declares {m} sets, found {len(sets)}", hline)
    return SetSystem(n, tuple(sets))


def serialize_setsystem(t: SetSystem) -> str:
    out = [f"p setsystem {t.n} {t.m}"]
    for s in t.sets:
        out.append(" ".join(["s", str(len(s))] + [str(a + 1) for a in sorted(s)]))
    return "\n".join(out) + "\n"


def parse_instance(text: str, path: str | None = None) -> InstanceFile:
    for lineno, parts in _lines(text):
        if parts[0] == "p" and len(parts) > 1 and parts[1] == "graph":
            return InstanceFile("graph", parse_graph(text), path)
        if parts[0] == "p" and len(parts) > 1 and parts[1] == "setsystem":
            return InstanceFile("setsystem", parse_setsystem(text), path)
        raise ParseError("expected a 'p graph' or 'p setsystem' header", lineno)
    raise ParseError("empty instance file")


def serialize_instance(x: Union[Graph, SetSystem]) -> str:
    if isinstance(x, Graph):
        return serialize_graph(x)
    return serialize_setsystem(x)


def read_instance(path: str | Path) -> InstanceFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_instance(text, str(path))


def parse_solution(text: str) -> list[int]:
    """0-based ids from a 1-based solution line. Blank input is the empty solution."""
    ids: list[int] = []
    for lineno, parts in _lines(text):
        for x in _ints(parts, lineno):
            if x < 1:
                raise ParseError(f"solution ids are 1-based, got {x}", lineno)
            ids.append(x - 1)
    if len(set(ids)) != len(ids):
        raise ParseError("solution repeats an id")
    return ids


def serialize_solution(ids) -> str:
    return " ".join(str(i + 1) for i in sorted(ids)) + "\n"
