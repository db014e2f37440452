"""Honeycomb toroidal graph construction.

A graph HTG(m, n, l) has m column cycles of length n. Vertex u_{i,j} sits in
column i, row j and is numbered ``i * n + j``. Every vertex has two vertical
neighbours (rows j - 1 and j + 1 in its own column) and one more neighbour,
either across a flat edge to an adjacent column or across the jump edge that
wraps column m - 1 back to column 0 with a row shift of l.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple


class HtgError(ValueError):
    """Base class for invalid input to the construction layer."""


class BadN(HtgError):
    pass


class BadParity(HtgError):
    pass


class BadRange(HtgError):
    pass


class NotSimple(HtgError):
    pass


class NotAnEdge(HtgError):
    pass


class BadFamilyArgs(HtgError):
    pass


class EdgeKind(enum.Enum):
    VERTICAL = "vertical"
    FLAT = "flat"
    JUMP = "jump"

    def __str__(self) -> str:
        return self.value


class VertexId(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"{self.i},{self.j}"


@dataclass(frozen=True, order=True)
class HtgParams:
    """A validated triple (m, n, l). Build through :func:`validate_params`."""

    m: int
    n: int
    l: int

    def __post_init__(self) -> None:
        _check(self.m, self.n, self.l)

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def size(self) -> int:
        return 3 * self.m * self.n // 2

    @property
    def is_normal(self) -> bool:
        return self.l <= self.n // 2

    def __str__(self) -> str:
        return f"HTG({self.m},{self.n},{self.l})"


def _check(m: int, n: int, l: int) -> None:
    if n % 2 or n < 4:
        raise BadN(f"n must be even and >= 4, got {n}")
    if m < 1:
        raise BadRange(f"m must be >= 1, got {m}")
    if not 0 <= l < n:
        raise BadRange(f"l must satisfy 0 <= l < n, got l={l}, n={n}")
    if (l - m) % 2:
        raise BadParity(f"l and m must have the same parity, got m={m}, l={l}")
    if m == 1 and l in (1, n - 1):
        raise NotSimple(f"HTG(1,{n},{l}) has jump edges parallel to vertical edges")


def validate_params(m: int, n: int, l: int) -> HtgParams:
    return HtgParams(int(m), int(n), int(l))


def normalize(p: HtgParams) -> HtgParams:
    """Return the isomorphic representative with l <= n/2."""
    return HtgParams(p.m, p.n, min(p.l, p.n - p.l) if p.l else 0)


def valid_jumps(m: int, n: int, normal: bool = True) -> list[int]:
    """All l for which (m, n, l) is valid; empty when m or n is invalid."""
    top = n // 2 if normal else n - 1
    out = []
    for l in range(0, top + 1):
        try:
            _check(m, n, l)
        except HtgError:
            continue
        out.append(l)
    return out


@dataclass(frozen=True)
class VertexSeq:
    """A path (``closed=False``) or cycle (``closed=True``) as a vertex list.

    Cycles do not repeat their first vertex at the end.
    """

    vertices: tuple[VertexId, ...]
    closed: bool

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> list[list[int]]:
        return [[v.i, v.j] for v in self.vertices]


# ----------------------------------------------------------------------------
# graph


@dataclass(frozen=True, eq=False)
class HtgGraph:
    """Immutable adjacency of HTG(m, n, l).

    ``adj[v]`` lists the neighbours of vertex ``v`` in the fixed order
    (vertical down, vertical up, flat or jump); ``kinds[v]`` is parallel.
    """

    params: HtgParams
    adj: tuple[tuple[int, int, int], ...]
    kinds: tuple[tuple[EdgeKind, EdgeKind, EdgeKind], ...]

    @property
    def order(self) -> int:
        return len(self.adj)

    @property
    def size(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def index(self, i: int, j: int) -> int:
        p = self.params
        return (i % p.m) * p.n + j % p.n

    def label(self, v: int) -> VertexId:
        return VertexId(*divmod(v, self.params.n))

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]

    def part(self, v: int) -> int:
        """0 if i + j is even, 1 otherwise."""
        i, j = divmod(v, self.params.n)
        return (i + j) % 2

    def edges(self) -> Iterator[tuple[int, int, EdgeKind]]:
        """Each edge once, as (a, b, kind) with a < b, in vertex order."""
        for a, (nbrs, ks) in enumerate(zip(self.adj, self.kinds)):
            for b, k in sorted(zip(nbrs, ks), key=lambda t: t[0]):
                if a < b:
                    yield a, b, k


def build(p: HtgParams) -> HtgGraph:
    m, n, l = p.m, p.n, p.l
    adj: list[tuple[int, int, int]] = []
    kinds: list[tuple[EdgeKind, EdgeKind, EdgeKind]] = []
    for i in range(m):
        for j in range(n):
            down = i * n + (j - 1) % n
            up = i * n + (j + 1) % n
            if (i + j) % 2 and i + 1 < m:
                third, kind = (i + 1) * n + j, EdgeKind.FLAT
            elif not (i + j) % 2 and i > 0:
                third, kind = (i - 1) * n + j, EdgeKind.FLAT
            elif i == m - 1 and (j - m) % 2 == 0:
                # u_{m-1,j} -- u_{0,j+l}; when m == 1 this is the odd end
                third, kind = (j + l) % n, EdgeKind.JUMP
            else:
                # column 0 end of a jump edge: u_{0,j} with j - l of parity m
                third, kind = (m - 1) * n + (j - l) % n, EdgeKind.JUMP
            adj.append((down, up, third))
            kinds.append((EdgeKind.VERTICAL, EdgeKind.VERTICAL, kind))
    return HtgGraph(p, tuple(adj), tuple(kinds))


def htg(m: int, n: int, l: int) -> HtgGraph:
    """Shorthand for ``build(validate_params(m, n, l))``."""
    return build(validate_params(m, n, l))


def classify_edge(g: HtgGraph, a: VertexId | int, b: VertexId | int) -> EdgeKind:
    ai = a if isinstance(a, int) else g.index(*a)
    bi = b if isinstance(b, int) else g.index(*b)
    for nb, kind in zip(g.adj[ai], g.kinds[ai]):
        if nb == bi:
            return kind
    raise NotAnEdge(f"{g.label(ai)} and {g.label(bi)} are not adjacent in {g.params}")


# ----------------------------------------------------------------------------
# named families


@dataclass(frozen=True)
class Hexagonal:
    m: int


@dataclass(frozen=True)
class Rectangular:
    m: int
    n: int


@dataclass(frozen=True)
class Parallelogramic:
    m: int
    n: int


def named_family(kind: Hexagonal | Rectangular | Parallelogramic) -> HtgParams:
    try:
        if isinstance(kind, Hexagonal):
            if kind.m < 1:
                raise BadFamilyArgs(f"hexagonal torus needs m >= 1, got {kind.m}")
            return validate_params(kind.m, 6 * kind.m, 3 * kind.m)
        if isinstance(kind, Rectangular):
            if kind.m < 2 or kind.m % 2:
                raise BadFamilyArgs(f"rectangular torus needs even m >= 2, got {kind.m}")
            return validate_params(kind.m, kind.n, 0)
        if isinstance(kind, Parallelogramic):
            return normalize(validate_params(kind.m, kind.n, kind.m % kind.n))
    except BadFamilyArgs:
        raise
    except HtgError as exc:
        raise BadFamilyArgs(str(exc)) from exc
    raise BadFamilyArgs(f"unknown family {kind!r}")


def planarity_class(p: HtgParams) -> str:
    """'planar' or 'nonplanar', by lookup of the known classification."""
    q = normalize(p)
    if q.m == 2 and (q.l == 0 or q.n == 4):
        return "planar"
    return "nonplanar"


# ----------------------------------------------------------------------------
# Cayley graphs on the dihedral group


@dataclass(frozen=True)
class DihedralConnection:
    """Connection set {tau, rho^i tau, rho^j tau} in D_n."""

    n: int
    i: int
    j: int

    def __post_init__(self) -> None:
        if not 0 < self.i < self.j < self.n:
            raise HtgError(f"need 0 < i < j < n, got i={self.i}, j={self.j}, n={self.n}")


@dataclass(frozen=True, eq=False)
class CayleyGraph:
    """Vertices 0..n-1 are rho^k, vertices n..2n-1 are rho^k tau."""

    connection: DihedralConnection
    adj: tuple[tuple[int, int, int], ...]

    @property
    def order(self) -> int:
        return len(self.adj)


def dihedral_cayley(c: DihedralConnection) -> tuple[CayleyGraph, bool]:
    n = c.n
    shifts = (0, c.i, c.j)
    adj = []
    # rho^k * rho^a tau = rho^(k+a) tau
    for k in range(n):
        adj.append(tuple(n + (k + a) % n for a in shifts))
    # rho^k tau * rho^a tau = rho^(k-a)
    for k in range(n):
        adj.append(tuple((k - a) % n for a in shifts))
    return CayleyGraph(c, tuple(adj)), math.gcd(n, c.i, c.j) == 1


# ----------------------------------------------------------------------------
# serialization


def export(g: HtgGraph, fmt: str = "edges") -> str:
    """Serialize as ``edges``, ``dot`` or ``json``. Output is deterministic."""
    if fmt == "edges":
        lines = [f"{g.label(a)} {g.label(b)} {k}" for a, b, k in g.edges()]
        return "".join(line + "\n" for line in lines)
    if fmt == "dot":
        p = g.params
        out = [f'graph "HTG({p.m},{p.n},{p.l})" {{']
        for v in range(g.order):
            i, j = g.label(v)
            out.append(f"  u_{i}_{j};")
        for a, b, k in g.edges():
            (ia, ja), (ib, jb) = g.label(a), g.label(b)
            out.append(f"  u_{ia}_{ja} -- u_{ib}_{jb} [kind={k}];")
        out.append("}")
        return "\n".join(out) + "\n"
    if fmt == "json":
        return json.dumps(to_json(g), indent=None, separators=(",", ":")) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")


def to_json(g: HtgGraph) -> dict:
    p = g.params
    return {
        "params": {"m": p.m, "n": p.n, "l": p.l},
        "order": g.order,
        "size": g.size,
        "adjacency": [
            {
                "vertex": list(g.label(v)),
                "neighbors": [
                    {"vertex": list(g.label(b)), "kind": str(k)}
                    for b, k in zip(g.adj[v], g.kinds[v])
                ],
            }
            for v in range(g.order)
        ],
    }
