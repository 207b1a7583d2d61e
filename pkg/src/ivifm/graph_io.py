"""Edge-list ingestion and the canonical JSON matrix format.

Edge lists describe an undirected network whose roads carry a crowdness
(membership) and a loneliness (non-membership) interval::

    n=3
    u,v,mu_lo,mu_hi,nu_lo,nu_hi
    # comment lines start with '#'
    1,2,.1,.3,.2,.5

Node ids are 1-based. Node pairs without an edge, and the diagonal, get
``<[0,0],[1,1]>`` (fully lonely).

Matrices serialize as ``{"rows":m,"cols":n,"entries":[[{"mu":[lo,hi],"nu":[lo,hi]},...],...]}``.
Numbers use the shortest decimal that round-trips (at most 17 significant
digits), so ``read_matrix(write_matrix(A)) == A`` bit for bit.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .errors import ParseError, ValidationError
from .matrix import IvifMatrix
from .values import ZERO, IvifValue, UnitInterval

CSV_HEADER = ("u", "v", "mu_lo", "mu_hi", "nu_lo", "nu_hi")


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    crowdness: UnitInterval
    loneliness: UnitInterval

    @property
    def value(self) -> IvifValue:
        return IvifValue(self.crowdness, self.loneliness)

    @property
    def pair(self) -> frozenset:
        return frozenset((self.u, self.v))


@dataclass(frozen=True)
class GraphSpec:
    node_count: int
    edges: Tuple[Edge, ...] = ()
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        n = self.node_count
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ValidationError(f"node count must be a positive integer, got {n!r}")
        seen = set()
        for e in self.edges:
            _check_edge(e, n, seen)


def _check_edge(e: Edge, n: int, seen: set):
    for node in (e.u, e.v):
        if not 1 <= node <= n:
            raise ValidationError(f"node {node} outside 1..{n}")
    if e.u == e.v:
        raise ValidationError(f"self-loop on node {e.u}")
    if e.pair in seen:
        raise ValidationError(f"duplicate edge between {min(e.pair)} and {max(e.pair)}")
    seen.add(e.pair)
    e.value  # crowdness + loneliness constraint


def _parse_node(text, lineno):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"node id {text!r} is not an integer", lineno) from None


def _parse_degree(text, lineno):
    try:
        return float(text)
    except ValueError:
        raise ParseError(f"{text!r} is not a number", lineno) from None


def parse_graph(text: str, label: Optional[str] = None) -> GraphSpec:
    """Parse an edge-list document into a validated :class:`GraphSpec`."""
    node_count = None
    header_seen = False
    edges = []
    seen = set()
    for lineno, row in enumerate(csv.reader(text.splitlines()), start=1):
        cells = [c.strip() for c in row]
        if not cells or cells == [""] or cells[0].startswith("#"):
            continue
        if node_count is None:
            key, sep, value = cells[0].partition("=")
            if len(cells) != 1 or not sep or key.strip() != "n":
                raise ParseError("expected 'n=<node_count>' as the first line", lineno)
            try:
                node_count = int(value)
            except ValueError:
                raise ParseError(f"node count {value!r} is not an integer", lineno) from None
            if node_count < 1:
                raise ValidationError(f"line {lineno}: node count must be positive")
            continue
        if not header_seen:
            if tuple(cells) != CSV_HEADER:
                raise ParseError(f"expected header {','.join(CSV_HEADER)}", lineno)
            header_seen = True
            continue
        if len(cells) != len(CSV_HEADER):
            raise ParseError(f"expected {len(CSV_HEADER)} fields, got {len(cells)}", lineno)
        u, v = (_parse_node(c, lineno) for c in cells[:2])
        mu_lo, mu_hi, nu_lo, nu_hi = (_parse_degree(c, lineno) for c in cells[2:])
        try:
            edge = Edge(u, v, UnitInterval(mu_lo, mu_hi), UnitInterval(nu_lo, nu_hi))
            _check_edge(edge, node_count, seen)
        except ValidationError as exc:
            raise ValidationError(f"line {lineno}: {exc}") from None
        edges.append(edge)
    if node_count is None:
        raise ParseError("missing 'n=<node_count>' line")
    if not header_seen:
        raise ParseError("missing header line")
    return GraphSpec(node_count, tuple(edges), label)


def format_number(x: float):
    """JSON/CSV-ready number: integral values as ints, otherwise shortest repr."""
    if x.is_integer() and math.copysign(1.0, x) > 0:
        return int(x)
    return x


def format_graph(g: GraphSpec) -> str:
    """Inverse of :func:`parse_graph` (comments and label are not kept)."""
    lines = [f"n={g.node_count}", ",".join(CSV_HEADER)]
    for e in g.edges:
        nums = (*e.crowdness, *e.loneliness)
        lines.append(",".join([str(e.u), str(e.v)] + [repr(format_number(x)) for x in nums]))
    return "\n".join(lines) + "\n"


def build_matrix(g: GraphSpec) -> IvifMatrix:
    """Symmetric adjacency matrix of ``g``; absent pairs and the diagonal are ``ZERO``."""
    n = g.node_count
    grid = [[ZERO] * n for _ in range(n)]
    for e in g.edges:
        grid[e.u - 1][e.v - 1] = grid[e.v - 1][e.u - 1] = e.value
    return IvifMatrix(tuple(map(tuple, grid)))


def value_to_dict(v: IvifValue) -> dict:
    return {
        "mu": [format_number(v.mu.lo), format_number(v.mu.hi)],
        "nu": [format_number(v.nu.lo), format_number(v.nu.hi)],
    }


def matrix_to_dict(a: IvifMatrix) -> dict:
    return {
        "rows": a.rows,
        "cols": a.cols,
        "entries": [[value_to_dict(v) for v in row] for row in a.entries],
    }


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), allow_nan=False)


def write_value(v: IvifValue) -> str:
    return _dumps(value_to_dict(v))


def write_matrix(a: IvifMatrix) -> str:
    return _dumps(matrix_to_dict(a))


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _is_count(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 1


def _interval(obj, where) -> UnitInterval:
    if not (isinstance(obj, list) and len(obj) == 2 and all(map(_is_number, obj))):
        raise ParseError(f"{where} must be a list of two numbers")
    return UnitInterval(*obj)


def value_from_dict(obj, where="value") -> IvifValue:
    if not isinstance(obj, dict) or set(obj) != {"mu", "nu"}:
        raise ParseError(f"{where} must be an object with exactly the keys 'mu' and 'nu'")
    try:
        return IvifValue(_interval(obj["mu"], f"{where}.mu"), _interval(obj["nu"], f"{where}.nu"))
    except ValidationError as exc:
        raise ValidationError(f"{where}: {exc}") from None


def matrix_from_dict(obj) -> IvifMatrix:
    if not isinstance(obj, dict) or set(obj) != {"rows", "cols", "entries"}:
        raise ParseError("matrix must be an object with exactly the keys 'rows', 'cols', 'entries'")
    rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    if not (_is_count(rows) and _is_count(cols)):
        raise ParseError("'rows' and 'cols' must be positive integers")
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"'entries' must be a list of {rows} rows")
    grid = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"row {i} must be a list of {cols} entries")
        grid.append(tuple(value_from_dict(e, f"entry ({i}, {j})") for j, e in enumerate(row)))
    return IvifMatrix(tuple(grid))


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None


def read_matrix(text: str) -> IvifMatrix:
    return matrix_from_dict(_loads(text))


def read_value(text: str) -> IvifValue:
    return value_from_dict(_loads(text))
