"""Brute-force ground truth for HTG properties.

Everything here works directly on adjacency lists and knows nothing about the
constructions in :mod:`htg.hamilton` or the formulas in :mod:`htg.predict`.
Exponential searches run under a :class:`SearchBudget` counted in node
expansions, so a verdict is reproducible regardless of machine speed.

Neighbour order is always the order stored in ``adj`` (down, up, then the
third neighbour), which makes every witness deterministic.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from .core import (
    EdgeKind,
    HtgGraph,
    HtgParams,
    VertexId,
    VertexSeq,
    build,
    valid_jumps,
)

DEFAULT_BUDGET = 10**7
PATH_CAP = 10**6

Adjacency = Sequence[Sequence[int]]


class BudgetExceeded(Exception):
    """Raised inside a search when its budget runs out."""


class TooLarge(Exception):
    """Raised when shortest-path enumeration would exceed the per-pair cap."""


@dataclass
class SearchBudget:
    max_expansions: int = DEFAULT_BUDGET
    consumed: int = 0

    def __post_init__(self) -> None:
        if self.max_expansions < 1:
            raise ValueError("budget must be positive")

    def spend(self, k: int = 1) -> None:
        self.consumed += k
        if self.consumed >= self.max_expansions:
            raise BudgetExceeded(self.consumed)

    def fresh(self) -> "SearchBudget":
        return SearchBudget(self.max_expansions)


class Outcome(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchVerdict:
    outcome: Outcome
    witness: Optional[VertexSeq] = None
    consumed: int = 0

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.FOUND

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "witness": None if self.witness is None else self.witness.to_json(),
            "consumed": self.consumed,
        }


def _seq(g: HtgGraph, vs: Sequence[int], closed: bool) -> VertexSeq:
    return VertexSeq(tuple(g.label(v) for v in vs), closed)


def _as_index(g: HtgGraph, v: VertexId | int) -> int:
    return v if isinstance(v, int) else g.index(*v)


# ----------------------------------------------------------------------------
# linear-time checkers


def check_sequence(g: HtgGraph, seq: VertexSeq, spanning: bool = True) -> bool:
    """True iff ``seq`` is a path/cycle of ``g`` (and visits every vertex if ``spanning``)."""
    p = g.params
    vs = []
    for v in seq.vertices:
        i, j = v
        if not (0 <= i < p.m and 0 <= j < p.n):
            return False
        vs.append(i * p.n + j)
    if len(set(vs)) != len(vs):
        return False
    if spanning and len(vs) != g.order:
        return False
    for a, b in zip(vs, vs[1:]):
        if b not in g.adj[a]:
            return False
    if seq.closed:
        if len(vs) < 3 or vs[0] not in g.adj[vs[-1]]:
            return False
    return True


def is_hamilton_cycle(g: HtgGraph, seq: VertexSeq) -> bool:
    return seq.closed and check_sequence(g, seq, spanning=True)


def is_hamilton_path(
    g: HtgGraph, seq: VertexSeq, s: VertexId | None = None, t: VertexId | None = None
) -> bool:
    if seq.closed or not check_sequence(g, seq, spanning=True):
        return False
    if s is not None and tuple(seq.vertices[0]) != tuple(s):
        return False
    if t is not None and tuple(seq.vertices[-1]) != tuple(t):
        return False
    return True


# ----------------------------------------------------------------------------
# Hamilton path search


def _reach_count(adj: Adjacency, visited: list[bool], head: int) -> int:
    """Number of unvisited vertices connected to ``head`` through unvisited vertices."""
    seen = {head}
    stack = [head]
    while stack:
        x = stack.pop()
        for w in adj[x]:
            if not visited[w] and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) - 1


def _hamilton_path_search(
    adj: Adjacency,
    s: int,
    t: int,
    budget: SearchBudget,
    accept: Callable[[list[int]], bool] | None = None,
) -> list[int] | None:
    n_vertices = len(adj)
    visited = [False] * n_vertices
    free = [len(a) for a in adj]

    def mark(x: int) -> None:
        visited[x] = True
        for w in adj[x]:
            free[w] -= 1

    def unmark(x: int) -> None:
        visited[x] = False
        for w in adj[x]:
            free[w] += 1

    def degree_ok(old_head: int, head: int) -> bool:
        # unvisited neighbours of the old head just lost it as a possible end
        for w in adj[old_head]:
            if visited[w]:
                continue
            avail = free[w] + (head in adj[w])
            if avail < (1 if w == t else 2):
                return False
        return True

    path = [s]
    mark(s)

    def dfs(head: int, remaining: int) -> bool:
        budget.spend()
        if remaining == 0:
            return head == t and (accept is None or accept(path))
        cands = [w for w in adj[head] if not visited[w] and (w != t or remaining == 1)]
        forced = [w for w in cands if w != t and free[w] == 1]
        if len(forced) > 1:
            return False
        if forced:
            cands = forced
        for w in cands:
            mark(w)
            path.append(w)
            if degree_ok(head, w):
                if _reach_count(adj, visited, w) == remaining - 1 and dfs(w, remaining - 1):
                    return True
            path.pop()
            unmark(w)
        return False

    if dfs(s, n_vertices - 1):
        return list(path)
    return None


def _bipartition(adj: Adjacency) -> list[int] | None:
    color = [-1] * len(adj)
    for r in range(len(adj)):
        if color[r] >= 0:
            continue
        color[r] = 0
        queue = deque([r])
        while queue:
            x = queue.popleft()
            for w in adj[x]:
                if color[w] < 0:
                    color[w] = 1 - color[x]
                    queue.append(w)
                elif color[w] == color[x]:
                    return None
    return color


def find_hamilton_path(
    g: HtgGraph,
    s: VertexId | int,
    t: VertexId | int,
    budget: SearchBudget | None = None,
    accept: Callable[[VertexSeq], bool] | None = None,
) -> SearchVerdict:
    """Search for a Hamilton path from ``s`` to ``t``.

    ``accept`` can reject complete witnesses; the search then keeps going, so
    NotFound means no *accepted* Hamilton path exists.
    """
    budget = budget or SearchBudget()
    si, ti = _as_index(g, s), _as_index(g, t)
    if si == ti:
        raise ValueError("endpoints must differ")
    try:
        budget.spend()
        color = _bipartition(g.adj)
        if color is not None:
            # a Hamilton path alternates sides: the side sizes decide the end colours
            c0 = color.count(0)
            c1 = len(color) - c0
            cs, ct = color[si], color[ti]
            if c0 == c1 and cs == ct:
                return SearchVerdict(Outcome.NOT_FOUND, consumed=budget.consumed)
            if c0 != c1:
                big = 0 if c0 > c1 else 1
                if abs(c0 - c1) > 1 or cs != big or ct != big:
                    return SearchVerdict(Outcome.NOT_FOUND, consumed=budget.consumed)
        wrapped = None if accept is None else (lambda vs: accept(_seq(g, vs, False)))
        found = _hamilton_path_search(g.adj, si, ti, budget, wrapped)
    except BudgetExceeded:
        return SearchVerdict(Outcome.BUDGET_EXCEEDED, consumed=budget.consumed)
    if found is None:
        return SearchVerdict(Outcome.NOT_FOUND, consumed=budget.consumed)
    seq = _seq(g, found, False)
    assert is_hamilton_path(g, seq, g.label(si), g.label(ti))
    return SearchVerdict(Outcome.FOUND, seq, consumed=budget.consumed)


@dataclass(frozen=True)
class LaceabilityResult:
    """``status`` is 'laceable', 'counterexample' or 'inconclusive'."""

    params: HtgParams
    status: str
    pair: Optional[tuple[VertexId, VertexId]] = None
    consumed: int = 0
    witnesses: tuple[VertexSeq, ...] = field(default=(), repr=False)


def is_hamilton_laceable(
    p: HtgParams, budget: SearchBudget | None = None, keep_witnesses: bool = False
) -> LaceabilityResult:
    """Sweep Hamilton paths from u_{0,0} to every vertex of the other part.

    Fixing the source is enough because HTG graphs are Cayley graphs, hence
    vertex-transitive, and any automorphism preserves the bipartition of a
    connected bipartite graph. ``budget`` is a per-pair cap.
    """
    budget = budget or SearchBudget()
    g = build(p)
    s = 0
    consumed = 0
    inconclusive = None
    witnesses = []
    for t in range(g.order):
        if g.part(t) == g.part(s):
            continue
        verdict = find_hamilton_path(g, s, t, budget.fresh())
        consumed += verdict.consumed
        if verdict.outcome is Outcome.NOT_FOUND:
            return LaceabilityResult(p, "counterexample", (g.label(s), g.label(t)), consumed)
        if verdict.outcome is Outcome.BUDGET_EXCEEDED:
            inconclusive = inconclusive or (g.label(s), g.label(t))
        elif keep_witnesses:
            witnesses.append(verdict.witness)
    if inconclusive is not None:
        return LaceabilityResult(p, "inconclusive", inconclusive, consumed)
    return LaceabilityResult(p, "laceable", None, consumed, tuple(witnesses))


# ----------------------------------------------------------------------------
# girth and cycles


def girth(g) -> int:
    """Exact girth by a BFS from every vertex; 0 for a forest."""
    adj = g.adj
    best = len(adj) + 1
    for r in range(len(adj)):
        dist = {r: 0}
        parent = {r: -1}
        queue = deque([r])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for w in adj[x]:
                if w not in dist:
                    dist[w] = dist[x] + 1
                    parent[w] = x
                    queue.append(w)
                elif w != parent[x]:
                    best = min(best, dist[x] + dist[w] + 1)
    return 0 if best > len(adj) else best


def _bfs(adj: Adjacency, s: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[s] = 0
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for w in adj[x]:
            if dist[w] < 0:
                dist[w] = dist[x] + 1
                queue.append(w)
    return dist


def _cycle_search(adj: Adjacency, r: int, length: int, budget: SearchBudget) -> list[int] | None:
    """A cycle with exactly ``length`` vertices through ``r``, or None.

    Prunes on the distance back to ``r`` and on the vertices still usable:
    every vertex left to add must be unvisited, keep two usable neighbours,
    and be joined to the head through such vertices. On a bipartite graph
    each side must also supply exactly half of the cycle.
    """
    n_vertices = len(adj)
    if length < 3 or length > n_vertices:
        return None
    back = _bfs(adj, r)
    color = _bipartition(adj)
    if color is None:
        color = [0] * n_vertices
        quota = [length, 0]
    elif length % 2:
        return None
    else:
        quota = [length // 2, length // 2]
    visited = [False] * n_vertices
    free = [len(a) for a in adj]
    taken = [0, 0]

    def mark(x: int) -> None:
        visited[x] = True
        taken[color[x]] += 1
        for w in adj[x]:
            free[w] -= 1

    def unmark(x: int) -> None:
        visited[x] = False
        taken[color[x]] -= 1
        for w in adj[x]:
            free[w] += 1

    r_adj = adj[r]

    def reach_ok(head: int) -> bool:
        need0, need1 = quota[0] - taken[0], quota[1] - taken[1]
        if need0 < 0 or need1 < 0:
            return False
        if need0 + need1 == 0:
            return r in adj[head]
        seen = {head}
        stack = [head]
        got = [0, 0]
        touches = False
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if visited[w] or w in seen:
                    continue
                seen.add(w)
                if free[w] + (head in adj[w]) + (w in r_adj) < 2:
                    continue
                got[color[w]] += 1
                if w in r_adj:
                    touches = True
                if touches and got[0] >= need0 and got[1] >= need1:
                    return True
                stack.append(w)
        return False

    path = [r]
    mark(r)

    def dfs(head: int, k: int) -> bool:
        budget.spend()
        if k == length:
            return r in adj[head]
        # fewest usable neighbours first; the stored order breaks ties
        cands = sorted(
            (w for w in adj[head] if not visited[w] and back[w] <= length - k),
            key=lambda w: free[w],
        )
        for w in cands:
            # after w the path has k + 1 vertices; length - k edges remain to close
            mark(w)
            path.append(w)
            if reach_ok(w) and dfs(w, k + 1):
                return True
            path.pop()
            unmark(w)
        return False

    return list(path) if dfs(r, 1) else None


def find_cycle(g: HtgGraph, length: int, root: VertexId | int = 0, budget: SearchBudget | None = None) -> SearchVerdict:
    """Search for a cycle of the given length through ``root``."""
    budget = budget or SearchBudget()
    try:
        found = _cycle_search(g.adj, _as_index(g, root), length, budget)
    except BudgetExceeded:
        return SearchVerdict(Outcome.BUDGET_EXCEEDED, consumed=budget.consumed)
    if found is None:
        return SearchVerdict(Outcome.NOT_FOUND, consumed=budget.consumed)
    seq = _seq(g, found, True)
    assert check_sequence(g, seq, spanning=False) and len(seq) == length
    return SearchVerdict(Outcome.FOUND, seq, consumed=budget.consumed)


def _frontier_width(adj: Adjacency, order: Sequence[int]) -> int:
    pos = {v: k for k, v in enumerate(order)}
    last = [max(pos[w] for w in adj[v]) for v in order]
    # at step k the frontier holds placed vertices whose last neighbour comes later
    return max(sum(1 for q in last[: k + 1] if q > k) for k in range(len(order)))


def _htg_orders(g: HtgGraph) -> dict[str, list[int]]:
    m, n, l = g.params.m, g.params.n, g.params.l
    rows_fold = []
    for k in range((n + 1) // 2):
        rows_fold.append(k)
        if n - 1 - k != k:
            rows_fold.append(n - 1 - k)
    orders = {
        "row": [i * n + j for j in range(n) for i in range(m)],
        "col": [i * n + j for i in range(m) for j in range(n)],
        "fold": [i * n + j for j in rows_fold for i in range(m)],
    }
    for shift in sorted({l, n - l, n // 2} - {0, n}):
        seen: set[int] = set()
        rows = []
        for j in range(n):
            for jj in (j, (j + shift) % n):
                if jj not in seen:
                    seen.add(jj)
                    rows.append(jj)
        orders[f"pair{shift}"] = [i * n + j for j in rows for i in range(m)]
    return orders


def best_vertex_order(g: HtgGraph) -> tuple[list[int], int]:
    """The candidate vertex order with the narrowest frontier, and its width."""
    scored = [(_frontier_width(g.adj, o), name, o) for name, o in _htg_orders(g).items()]
    width, _, order = min(scored, key=lambda t: (t[0], t[1]))
    return order, width


def cycle_lengths_frontier(adj: Adjacency, order: Sequence[int], budget: SearchBudget | None = None) -> frozenset[int]:
    """All cycle lengths of a graph by dynamic programming over an edge order.

    Edges are decided one at a time (in or out). A state records, for every
    vertex on the frontier, whether it has degree 0, degree 2, or is the end
    of a partial path (and then which vertex is the other end). Each state
    carries a bitset of achievable edge counts. A cycle is recorded when an
    edge joins the two ends of the only open path. Exact; cost grows with the
    frontier width of ``order``. ``budget`` is charged one unit per state
    update.
    """
    budget = budget or SearchBudget()
    pos = {v: k for k, v in enumerate(order)}
    edges = sorted(
        {(min(a, b), max(a, b)) for a in range(len(adj)) for b in adj[a]},
        key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])),
    )
    last_edge = {}
    for k, (a, b) in enumerate(edges):
        last_edge[a] = k
        last_edge[b] = k

    # slot values: -1 degree 0, -2 degree 2, otherwise the other end of the path
    states: dict[tuple[int, ...], int] = {(): 1}
    frontier: list[int] = []
    lengths = 0
    for k, (a, b) in enumerate(edges):
        for v in (a, b):
            if v not in frontier:
                frontier.append(v)
                states = {key + (-1,): mask for key, mask in states.items()}
        slot = {v: i for i, v in enumerate(frontier)}
        ia, ib = slot[a], slot[b]
        nxt: dict[tuple[int, ...], int] = {}
        budget.spend(len(states))
        for key, mask in states.items():
            nxt[key] = nxt.get(key, 0) | mask
            ma, mb = key[ia], key[ib]
            if ma == -2 or mb == -2:
                continue
            if ma == b:
                if sum(1 for x in key if x >= 0) == 2:
                    lengths |= mask << 1
                continue
            ends = list(key)
            ea = a if ma == -1 else ma
            eb = b if mb == -1 else mb
            ends[ia] = -1 if ma == -1 else -2
            ends[ib] = -1 if mb == -1 else -2
            ends[slot[ea]] = eb
            ends[slot[eb]] = ea
            nk = tuple(ends)
            nxt[nk] = nxt.get(nk, 0) | (mask << 1)
        states = nxt
        for v in (a, b):
            if last_edge[v] != k:
                continue
            i = frontier.index(v)
            frontier.pop(i)
            kept: dict[tuple[int, ...], int] = {}
            for key, mask in states.items():
                if key[i] >= 0:
                    continue  # a path end can no longer be extended
                nk = key[:i] + key[i + 1 :]
                kept[nk] = kept.get(nk, 0) | mask
            states = kept
    return frozenset(L for L in range(3, len(adj) + 1) if lengths >> L & 1)


@dataclass(frozen=True)
class Spectrum:
    """Cycle lengths found, plus lengths whose search ran out of budget."""

    lengths: frozenset[int]
    inconclusive: frozenset[int]
    order: int
    consumed: int = 0
    witnesses: dict = field(default_factory=dict, repr=False, compare=False)

    def missing(self) -> frozenset[int]:
        """Even lengths in [4, order] proven absent."""
        evens = range(4, self.order + 1, 2)
        return frozenset(L for L in evens if L not in self.lengths and L not in self.inconclusive)


QUICK_BUDGET = 3 * 10**4
FRONTIER_WIDTH_CAP = 10


def cycle_spectrum(g: HtgGraph, budget: SearchBudget | None = None) -> Spectrum:
    """Exact set of cycle lengths of an HTG.

    Each even length gets a backtracking search for a cycle through u_{0,0}
    (enough because the graph is vertex-transitive and bipartite), first with
    a small budget. Lengths still open are settled by the frontier dynamic
    program when a narrow vertex order exists, otherwise by backtracking with
    the full per-length ``budget``. Lengths left open after that are reported
    as inconclusive.
    """
    budget = budget or SearchBudget()
    found, open_, witnesses = set(), [], {}
    consumed = 0
    lengths = range(4, g.order + 1, 2)

    def search(length: int, cap: int) -> bool:
        nonlocal consumed
        verdict = find_cycle(g, length, 0, SearchBudget(cap))
        consumed += verdict.consumed
        if verdict.found:
            found.add(length)
            witnesses[length] = verdict.witness
        return verdict.outcome is not Outcome.BUDGET_EXCEEDED

    for length in lengths:
        if not search(length, min(budget.max_expansions, QUICK_BUDGET)):
            open_.append(length)
    if open_ and budget.max_expansions > QUICK_BUDGET:
        order, width = best_vertex_order(g)
        if width <= FRONTIER_WIDTH_CAP:
            dp_budget = SearchBudget(budget.max_expansions)
            try:
                exact = cycle_lengths_frontier(g.adj, order, dp_budget)
            except BudgetExceeded:
                exact = None
            consumed += dp_budget.consumed
            if exact is not None:
                found.update(L for L in open_ if L in exact)
                open_ = []
        open_ = [L for L in open_ if not search(L, budget.max_expansions)]
    return Spectrum(frozenset(found), frozenset(open_), g.order, consumed, witnesses)


# ----------------------------------------------------------------------------
# distances


@dataclass(frozen=True)
class DistanceTable:
    source: VertexId
    dist: tuple[int, ...]

    @property
    def eccentricity(self) -> int:
        return max(self.dist)


def distances(g: HtgGraph, s: VertexId | int) -> DistanceTable:
    si = _as_index(g, s)
    return DistanceTable(g.label(si), tuple(_bfs(g.adj, si)))


def diameter(g, reduced: bool = False) -> int:
    """Largest eccentricity. ``reduced`` uses vertex 0 only (valid for
    vertex-transitive graphs)."""
    sources = [0] if reduced else range(len(g.adj))
    best = 0
    for s in sources:
        d = _bfs(g.adj, s)
        if min(d) < 0:
            raise ValueError("graph is disconnected")
        best = max(best, max(d))
    return best


# ----------------------------------------------------------------------------
# isomorphisms and automorphisms


def _all_distances(adj: Adjacency) -> list[list[int]]:
    return [_bfs(adj, s) for s in range(len(adj))]


def _bfs_order(adj: Adjacency, root: int) -> tuple[list[int], list[int]]:
    order, parent = [root], {root: -1}
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for w in adj[x]:
            if w not in parent:
                parent[w] = x
                order.append(w)
    return order, [parent[v] for v in order]


def _isomorphisms(
    adj_a: Adjacency,
    adj_b: Adjacency,
    root_a: int,
    root_b: int,
    dist_a: list[list[int]],
    dist_b: list[list[int]],
    budget: SearchBudget,
) -> Iterator[list[int]]:
    """Yield every isomorphism a -> b (as an image list) sending root_a to root_b.

    Vertices of ``a`` are mapped in BFS order, so each new vertex must go to a
    neighbour of its parent's image; a candidate must also keep the distance to
    the root and adjacency to every vertex mapped so far. Both graphs are
    assumed connected with equal order and size.
    """
    order, parents = _bfs_order(adj_a, root_a)
    if len(order) != len(adj_a):
        return
    nv = len(adj_a)
    image = [-1] * nv
    used = [False] * len(adj_b)
    da, db = dist_a[root_a], dist_b[root_b]
    image[root_a] = root_b
    used[root_b] = True
    if len(adj_a[root_a]) != len(adj_b[root_b]):
        return

    def extend(k: int) -> Iterator[list[int]]:
        budget.spend()
        if k == nv:
            yield list(image)
            return
        w = order[k]
        pw = image[parents[k]]
        for c in adj_b[pw]:
            if used[c] or db[c] != da[w] or len(adj_b[c]) != len(adj_a[w]):
                continue
            if any(image[x] >= 0 and image[x] not in adj_b[c] for x in adj_a[w]):
                continue
            image[w] = c
            used[c] = True
            yield from extend(k + 1)
            image[w] = -1
            used[c] = False

    yield from extend(1)


def _profile(dist_row: Sequence[int]) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for d in dist_row:
        counts[d] = counts.get(d, 0) + 1
    return tuple(counts[k] for k in sorted(counts))


def find_isomorphism(a, b, budget: SearchBudget | None = None) -> list[int] | None:
    """An isomorphism between two connected graphs given by ``.adj``, or None."""
    budget = budget or SearchBudget()
    adj_a, adj_b = a.adj, b.adj
    if len(adj_a) != len(adj_b):
        return None
    if sum(map(len, adj_a)) != sum(map(len, adj_b)):
        return None
    da, db = _all_distances(adj_a), _all_distances(adj_b)
    if any(x < 0 for row in da for x in row) or any(x < 0 for row in db for x in row):
        raise ValueError("isomorphism search needs connected graphs")
    prof_a = [_profile(r) for r in da]
    prof_b = [_profile(r) for r in db]
    if sorted(prof_a) != sorted(prof_b):
        return None
    for rb in range(len(adj_b)):
        if prof_b[rb] != prof_a[0]:
            continue
        for iso in _isomorphisms(adj_a, adj_b, 0, rb, da, db, budget):
            return iso
    return None


def is_isomorphic(a, b, budget: SearchBudget | None = None) -> bool:
    return find_isomorphism(a, b, budget) is not None


def match_htg(graph, budget: SearchBudget | None = None, m: int | None = None) -> HtgParams | None:
    """The first normal-form HTG, by (m, n, l), isomorphic to ``graph``.

    ``m`` restricts the search to that column count.
    """
    order = len(graph.adj)
    for m in [m] if m else range(1, order + 1):
        if order % m:
            continue
        for l in valid_jumps(m, order // m):
            p = HtgParams(m, order // m, l)
            if is_isomorphic(graph, build(p), budget):
                return p
    return None


def automorphism_count(g, budget: SearchBudget | None = None) -> int:
    """Exact |Aut(g)| as |orbit of vertex 0| * |stabilizer of vertex 0|.

    The orbit is found by searching for one automorphism 0 -> v for every v,
    so transitivity is verified rather than assumed. Raises BudgetExceeded.
    """
    budget = budget or SearchBudget()
    adj = g.adj
    dist = _all_distances(adj)
    if any(x < 0 for x in dist[0]):
        raise ValueError("automorphism count needs a connected graph")
    prof = [_profile(r) for r in dist]
    stabilizer = sum(1 for _ in _isomorphisms(adj, adj, 0, 0, dist, dist, budget))
    orbit = {0}
    for v in range(1, len(adj)):
        if v in orbit or prof[v] != prof[0]:
            continue
        for phi in _isomorphisms(adj, adj, 0, v, dist, dist, budget):
            # the images of 0 under powers of phi are in the orbit too
            x = phi[0]
            while x not in orbit:
                orbit.add(x)
                x = phi[x]
            break
    return len(orbit) * stabilizer


# ----------------------------------------------------------------------------
# shortest-path lemmas


@dataclass(frozen=True)
class LemmaViolation:
    """A shortest path breaking one of the two structural lemmas.

    ``lemma`` is 'A' (jump edges traversed in both directions) or 'B' (two
    flat edges between the same columns with no jump edge between them).
    """

    lemma: str
    path: VertexSeq


def _jump_direction(g: HtgGraph, v: int) -> int:
    """+1 when leaving ``v`` along its jump edge goes column 0 -> m-1."""
    p = g.params
    i, j = divmod(v, p.n)
    return -1 if i == p.m - 1 and (j - p.m) % 2 == 0 else 1


def shortest_path_lemma_audit(
    p: HtgParams, cap: int = PATH_CAP, reduced: bool = True
) -> list[LemmaViolation]:
    """Enumerate shortest paths and report lemma violations.

    Every prefix of a shortest path is a shortest path, so a DFS over the BFS
    predecessor DAG of each source visits every shortest path exactly once.
    Only the shortest violating prefix is reported; its extensions are not
    enumerated. With ``reduced`` the sources are rows 0 and 1 of each column:
    the row shift j -> j + 2 is an automorphism that preserves edge kinds and
    traversal directions, so other sources add nothing.
    """
    g = build(p)
    n = p.n
    sources = [i * n + j for i in range(p.m) for j in (0, 1)] if reduced else range(g.order)
    violations: list[LemmaViolation] = []
    for s in sources:
        dist = _bfs(g.adj, s)
        counts = [0] * g.order
        path = [s]

        def walk(v: int, jump_dir: int, flats: frozenset) -> None:
            counts[v] += 1
            if counts[v] > cap:
                raise TooLarge(f"more than {cap} shortest paths from {g.label(s)} to {g.label(v)}")
            for w, kind in zip(g.adj[v], g.kinds[v]):
                if dist[w] != dist[v] + 1:
                    continue
                path.append(w)
                lemma = None
                nd, nf = jump_dir, flats
                if kind is EdgeKind.JUMP:
                    d = _jump_direction(g, v)
                    if jump_dir and d != jump_dir:
                        lemma = "A"
                    nd, nf = d, frozenset()
                elif kind is EdgeKind.FLAT:
                    pair = min(v, w) // n
                    if pair in flats:
                        lemma = "B"
                    nf = flats | {pair}
                if lemma:
                    violations.append(LemmaViolation(lemma, _seq(g, path, False)))
                else:
                    walk(w, nd, nf)
                path.pop()

        walk(s, 0, frozenset())
    return violations
