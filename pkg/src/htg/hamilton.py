"""Constructive Hamilton cycles and laceable paths for HTG(m, n, l).

The cycle construction is by cases on m:

* m = 1: the column itself.
* m = 2: chain the 4-paths u_{0,i} u_{0,i+1} u_{1,i+1} u_{1,i} (then jump to
  u_{0,i+l}) starting from i = 0; when the chain misses rows, each of its flat
  edges is replaced by an upward fill of the skipped rows.
* m = 3: take a Hamilton cycle of HTG(1, n, l) that uses jump edges, push each
  jump out to column 2 and fill columns 1 and 2.
* m >= 4: build HTG(m - 2, n, l), split every flat edge between columns 0
  and 1 through two new columns and fill them.

All sequences are lists of ``VertexId``; callers validate with
:func:`htg.oracle.check_sequence`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import HtgError, HtgParams, VertexId, VertexSeq, build, validate_params


class BadRows(HtgError):
    pass


class NoJumpEdge(HtgError):
    pass


class BadEndpoints(HtgError):
    pass


@dataclass(frozen=True)
class FillSpec:
    """Fill columns ``columns[0]`` and ``columns[0] + 1`` from the given rows.

    ``direction`` is 'down' or 'up'. Row t_a is where the path for attachment
    a enters the left filler column and leaves the right one.
    """

    columns: tuple[int, int]
    rows: tuple[int, ...]
    direction: str = "down"


def vertical_fill(n: int, spec: FillSpec) -> list[VertexSeq]:
    """One path per attachment row, jointly covering both filler columns.

    Going down, path a enters at u_{c,t_a}, descends column c to row
    t_{a-1} + 1, crosses, and climbs column c + 1 back to row t_a (row
    indices are cyclic, and t_0 means t_k). Going up mirrors this.
    """
    rows = spec.rows
    if not rows:
        raise BadRows("at least one attachment row is needed")
    if any(not 0 <= t < n for t in rows) or any(a >= b for a, b in zip(rows, rows[1:])):
        raise BadRows(f"rows must be strictly increasing within [0, {n}), got {rows}")
    if spec.direction not in ("down", "up"):
        raise BadRows(f"direction must be 'down' or 'up', got {spec.direction!r}")
    c, c2 = spec.columns
    if c2 != c + 1:
        raise BadRows(f"filler columns must be adjacent, got {spec.columns}")
    k = len(rows)
    paths = []
    for a, t in enumerate(rows):
        if spec.direction == "down":
            stop = rows[a - 1]  # t_0 wraps to t_k
            span = (t - stop - 1) % n + 1  # rows t, t-1, ..., stop+1
            walk = [(t - s) % n for s in range(span)]
        else:
            stop = rows[(a + 1) % k]
            span = (stop - t - 1) % n + 1  # rows t, t+1, ..., stop-1
            walk = [(t + s) % n for s in range(span)]
        seq = [VertexId(c, j) for j in walk] + [VertexId(c2, j) for j in reversed(walk)]
        paths.append(VertexSeq(tuple(seq), False))
    return paths


def _fill_map(n: int, columns: tuple[int, int], rows: Sequence[int], direction: str) -> dict[int, list[VertexId]]:
    ordered = sorted(set(rows))
    paths = vertical_fill(n, FillSpec(columns, tuple(ordered), direction))
    return {t: list(p.vertices) for t, p in zip(ordered, paths)}


# ----------------------------------------------------------------------------
# HTG(1, n, l)


def _weave(n: int, l: int, k: int, direction: int) -> list[int] | None:
    """Rows of a cycle made of vertical runs joined by jump edges.

    Runs start at the rows congruent to 0, 2, ..., 2k-2 modulo g, where g is
    gcd(n, l - 1) going forward and gcd(n, l + 1) going backward. A forward
    run climbs from its start to just below the next start and jumps from
    there; a backward run descends to just above the previous start. Either
    way the jump lands on another start, and the runs form one cycle exactly
    when gcd(n/g, k*(l -+ 1)/g +- 1) == 1. Returns None otherwise.
    """
    shift = l - direction
    g = math.gcd(n, shift)
    if not 1 <= k <= g // 2 or math.gcd(n // g, k * shift // g + direction) != 1:
        return None
    starts = sorted(r + t * g for t in range(n // g) for r in range(0, 2 * k, 2))
    pos = {e: a for a, e in enumerate(starts)}
    rows, e = [], 0
    while True:
        a = pos[e]
        if direction > 0:
            end = (starts[(a + 1) % len(starts)] - 1) % n
            run = [(e + s) % n for s in range((end - e) % n + 1)]
        else:
            end = (starts[a - 1] + 1) % n
            run = [(e - s) % n for s in range((e - end) % n + 1)]
        rows += run
        e = (end + l) % n
        if e == 0:
            break
    return rows if len(rows) == n else None


def second_hamilton_cycle_htg1(n: int, l: int) -> VertexSeq:
    """A Hamilton cycle of HTG(1, n, l) other than the column cycle.

    Tries weaves (see :func:`_weave`), shortest runs first, forward before
    backward; the two-row forward weave is Hamiltonian when gcd(n, l+1) = 2
    and the two-row backward one when gcd(n, l-1) = 2. Next come periodic
    patterns of dropped column edges, and last a backtracking search for a
    Hamilton cycle through u_0 u_1 that uses a jump edge, which always exists.
    """
    p = validate_params(1, n, l)
    rows = None
    for direction in (+1, -1):
        g = math.gcd(n, l - direction)
        for k in range(g // 2, 0, -1):
            rows = _weave(n, l, k, direction)
            if rows:
                break
        if rows:
            break
    if rows is None:
        rows = _periodic_cycle(n, l)
    if rows is None:
        rows = _search_htg1_cycle(p)
    return VertexSeq(tuple(VertexId(0, j) for j in rows), True)


MAX_PERIOD = 36


def _periodic_patterns(p: int, l: int) -> Iterator[tuple[int, ...]]:
    """Dropped-edge patterns on a p-cycle whose ends pair up under the jumps.

    The jump partner of an odd row v is v + l, so picking a set of odd rows
    fixes the whole end set. It is usable when it splits into runs of even
    length, each cut into consecutive pairs; the full cycle has two cuttings.
    """
    odds = range(1, p, 2)
    for mask in range(1, 1 << len(odds)):
        ends = set()
        for b, v in enumerate(odds):
            if mask >> b & 1:
                ends.update((v, (v + l) % p))
        if len(ends) == p:
            yield tuple(range(0, p, 2))
            yield tuple(range(1, p, 2))
            continue
        start = next(v for v in range(p) if v in ends and (v - 1) % p not in ends)
        dropped, run = [], 0
        for x in (v % p for v in range(start, start + p)):
            if x in ends:
                run += 1
                if run % 2 == 0:
                    dropped.append((x - 1) % p)
            elif run % 2:
                break
            else:
                run = 0
        else:
            if run % 2 == 0:
                yield tuple(dropped)


def _cycle_without(n: int, l: int, dropped: set[int]) -> list[int] | None:
    """Rows of the 2-factor column - dropped + jumps at the dropped ends, if
    it is a well-defined Hamilton cycle. ``dropped`` holds x for {x, x+1}."""
    cut = {}
    for x in dropped:
        cut[x] = (x + 1) % n
        cut[(x + 1) % n] = x
    partner = {v: (v + l) % n if v % 2 else (v - l) % n for v in cut}
    if any(w not in cut for w in partner.values()):
        return None
    rows, prev, cur = [0], None, 0
    while True:
        nbrs = [w for w in ((cur - 1) % n, (cur + 1) % n) if cut.get(cur) != w]
        if cur in partner:
            nbrs.append(partner[cur])
        nxt = next(w for w in nbrs if w != prev)
        if nxt == 0:
            return rows if len(rows) == n else None
        if len(rows) == n:
            return None
        rows.append(nxt)
        prev, cur = cur, nxt


def _periodic_cycle(n: int, l: int, max_period: int = MAX_PERIOD) -> list[int] | None:
    """Drop a periodic set of column edges and take the jumps at their ends.

    Every Hamilton cycle of HTG(1, n, l) that uses jumps has this shape for
    some set of dropped edges; here only sets repeating with an even period
    p dividing n are tried, smallest p first. Cost grows like 2^(p/2).
    """
    for period in range(2, min(n, max_period) + 1, 2):
        if n % period:
            continue
        for pattern in _periodic_patterns(period, l):
            dropped = {x + t * period for t in range(n // period) for x in pattern}
            rows = _cycle_without(n, l, dropped)
            if rows:
                return rows
    return None


def _search_htg1_cycle(p: HtgParams) -> list[int]:
    from .oracle import Outcome, SearchBudget, find_hamilton_path

    g = build(p)
    n = p.n

    def uses_jump(seq: VertexSeq) -> bool:
        return any((b.j - a.j) % n not in (1, n - 1) for a, b in zip(seq.vertices, seq.vertices[1:]))

    budget = 10**5
    while True:
        # a Hamilton path u_1 -> u_0 closes through the edge u_0 u_1
        verdict = find_hamilton_path(g, 1, 0, SearchBudget(budget), accept=uses_jump)
        if verdict.found:
            return [0] + [v.j for v in verdict.witness.vertices[:-1]]
        if verdict.outcome is Outcome.NOT_FOUND:
            raise AssertionError(f"no second Hamilton cycle in {p}")
        budget *= 10


def _htg1_jump_cycle(n: int, l: int) -> list[int]:
    """Rows of a cycle through every row of a column, using at least one jump.

    For l in {1, n-1} (where HTG(1, n, l) is not simple) the column cycle
    itself qualifies once one of its edges is read as the parallel jump edge;
    :func:`_jump_positions` makes that choice.
    """
    if l in (1, n - 1):
        return list(range(n))
    return [v.j for v in second_hamilton_cycle_htg1(n, l).vertices]


def _is_jump_step(a: int, b: int, n: int, l: int) -> bool:
    """Whether rows a -> b in a one-column sequence is a jump step."""
    odd, even = (a, b) if a % 2 else (b, a)
    return (odd + l) % n == even


def _jump_positions(rows: Sequence[int], n: int, l: int, closed: bool) -> list[int]:
    """Indices k such that rows[k] -> rows[k+1] is read as a jump edge."""
    steps = len(rows) if closed else len(rows) - 1
    out = []
    for k in range(steps):
        a, b = rows[k], rows[(k + 1) % len(rows)]
        if (b - a) % n in (1, n - 1):
            continue
        if _is_jump_step(a, b, n, l):
            out.append(k)
        else:
            raise AssertionError(f"rows {a} -> {b} are not adjacent in HTG(1,{n},{l})")
    if not out and l in (1, n - 1):
        # parallel edges: read the first suitable vertical step as the jump
        for k in range(steps):
            a, b = rows[k], rows[(k + 1) % len(rows)]
            if _is_jump_step(a, b, n, l):
                out.append(k)
                break
    return out


def _project(rows: Sequence[int], n: int, l: int, closed: bool, extra: Sequence[int] = ()) -> list[VertexId]:
    """Lift a one-column path or cycle to HTG(3, n, l).

    Every jump step u_{0,a} u_{0,a+l} (a odd) becomes u_{0,a}, a fill of
    columns 1 and 2 ending at u_{2,a}, then the jump u_{2,a} u_{0,a+l}. A row
    in ``extra`` must be the end of the path, which then continues from
    u_{0,t} through one more fill to u_{2,t}.
    """
    jumps = _jump_positions(rows, n, l, closed)
    attach = []
    for k in jumps:
        a, b = rows[k], rows[(k + 1) % len(rows)]
        attach.append(a if a % 2 else b)
    fills = _fill_map(n, (1, 2), attach + list(extra), "down")
    jump_at = set(jumps)
    out: list[VertexId] = []
    for k, a in enumerate(rows):
        out.append(VertexId(0, a))
        if k not in jump_at:
            continue
        if a % 2:
            out.extend(fills[a])
        else:
            # arriving at the even end: jump to column 2, fill back to column 1
            out.extend(reversed(fills[rows[(k + 1) % len(rows)]]))
    for t in extra:
        if out[-1] != VertexId(0, t):
            raise BadEndpoints(f"row {t} is not the end of the path")
        out.extend(fills[t])
    return out


def _widen(seq: list[VertexId], n: int, extra_columns: int, closed: bool) -> list[VertexId]:
    """Insert ``extra_columns`` (even) new columns after column 0.

    Existing columns c >= 1 shift right; every flat edge between columns 0
    and 1 is split by a downward fill of the two new columns. Applied two
    columns at a time.
    """
    assert extra_columns % 2 == 0
    for _ in range(extra_columns // 2):
        seq = _split_once(seq, n, closed)
    return seq


def _is_flat01(a: VertexId, b: VertexId) -> bool:
    # same-row steps between columns 0 and 1 on an even row are jump edges (m = 2, l = 0)
    return {a.i, b.i} == {0, 1} and a.j == b.j and a.j % 2 == 1


def _split_once(seq: list[VertexId], n: int, closed: bool) -> list[VertexId]:
    steps = len(seq) if closed else len(seq) - 1
    rows = []
    for k in range(steps):
        a, b = seq[k], seq[(k + 1) % len(seq)]
        if _is_flat01(a, b):
            rows.append(a.j)
    if not rows:
        raise AssertionError("no flat edge between columns 0 and 1 to split")
    fills = _fill_map(n, (1, 2), rows, "down")
    shifted = [VertexId(v.i + 2, v.j) if v.i >= 1 else v for v in seq]
    out: list[VertexId] = []
    for k in range(len(seq)):
        a, b = seq[k], seq[(k + 1) % len(seq)]
        out.append(shifted[k])
        if k < steps and _is_flat01(a, b):
            fill = fills[a.j]
            out.extend(fill if a.i == 0 else reversed(fill))
    return out


# ----------------------------------------------------------------------------
# Hamilton cycles


def _htg2_cycle(n: int, l: int) -> list[VertexId]:
    starts, i = [], 0
    while True:
        starts.append(i)
        i = (i + l) % n
        if i == 0:
            break
    # chain starts are gcd(n, l) rows apart; with a gap of 2 the 4-paths
    # already cover everything, otherwise the fill climbs through the gap
    gap = n // len(starts)
    seq: list[VertexId] = []
    for i in starts:
        seq.extend(VertexId(0, (i + s) % n) for s in range(gap))
        seq.extend(VertexId(1, (i + gap - 1 - s) % n) for s in range(gap))
        # then the jump u_{1,i} -- u_{0,i+l}
    return seq


def hamilton_cycle(p: HtgParams) -> VertexSeq:
    m, n, l = p.m, p.n, p.l
    if m == 1:
        seq = [VertexId(0, j) for j in range(n)]
    elif m % 2 == 0:
        seq = _widen(_htg2_cycle(n, l), n, m - 2, closed=True)
    else:
        seq = _widen(_project(_htg1_jump_cycle(n, l), n, l, closed=True), n, m - 3, closed=True)
    return VertexSeq(tuple(seq), True)


# ----------------------------------------------------------------------------
# laceability


def lift_laceable_path(base: VertexSeq, m: int, n: int, l: int, retarget: bool = False) -> VertexSeq:
    """Turn a Hamilton path u_{0,0} -> u_{0,j} of HTG(1, n, l) that uses a jump
    edge into a Hamilton path of HTG(m, n, l) for odd m >= 3.

    The result runs u_{0,0} -> u_{0,j}, or u_{0,0} -> u_{m-1,j} when
    ``retarget`` is set (the extra flat edge at row j feeds one more fill,
    which ends in column 2 before the widening to m columns shifts it).
    """
    if m < 3 or m % 2 == 0:
        raise HtgError(f"m must be odd and >= 3, got {m}")
    validate_params(m, n, l)
    if base.closed or len(base) != n:
        raise BadEndpoints("base must be a Hamilton path of HTG(1, n, l)")
    rows = [v.j for v in base.vertices]
    if any(v.i != 0 for v in base.vertices) or sorted(rows) != list(range(n)):
        raise BadEndpoints("base must be a Hamilton path of HTG(1, n, l)")
    if rows[0] != 0 or rows[-1] % 2 == 0:
        raise BadEndpoints(f"base must run from u_0 to an odd row, got {rows[0]} -> {rows[-1]}")
    if not any((b - a) % n not in (1, n - 1) for a, b in zip(rows, rows[1:])):
        raise NoJumpEdge("base path uses no jump edge")
    extra: tuple[int, ...] = ()
    if retarget:
        if (rows[-1] - rows[-2]) % n not in (1, n - 1):
            raise BadEndpoints("the last edge of the base is a jump; row j is already attached")
        extra = (rows[-1],)
    seq = _widen(_project(rows, n, l, closed=False, extra=extra), n, m - 3, closed=False)
    return VertexSeq(tuple(seq), False)


def htg3_automorphisms(n: int, l: int) -> tuple[dict[VertexId, VertexId], dict[VertexId, VertexId]]:
    """The maps f (rows +2) and g (columns +1, rows +1, wrapping through the
    jump) of HTG(3, n, l), checked to preserve adjacency."""
    p = validate_params(3, n, l)
    f, g = {}, {}
    for i in range(3):
        for j in range(n):
            v = VertexId(i, j)
            f[v] = VertexId(i, (j + 2) % n)
            g[v] = VertexId(i + 1, (j + 1) % n) if i < 2 else VertexId(0, (1 + j + l) % n)
    graph = build(p)
    for phi, name in ((f, "f"), (g, "g")):
        for a, b, _ in graph.edges():
            x, y = phi[graph.label(a)], phi[graph.label(b)]
            if not graph.has_edge(graph.index(*x), graph.index(*y)):
                raise AssertionError(f"{name} does not preserve the edge {graph.label(a)}-{graph.label(b)}")
    return f, g
