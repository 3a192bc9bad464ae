"""Recovering a deleted table from lane exactness alone.

Every cell of the missing table inside its structural support box is an
unknown nonnegative integer; cells outside the box are structural zeros.
Each lane of the template instance imposes the exactness relation
d_i = r_{i-1} + r_i with nonnegative connecting ranks that vanish at both
ends.  We propagate these as interval constraints: a forward and a backward
sweep of the rank recursion turn known intervals for the d_i into intervals
for the ranks and back, and sweeping all lanes to a fixpoint tightens every
cell as far as the dimension data allows.

The propagation is sound: the true table always lies inside every computed
interval, so a cell whose interval collapses to a point is genuinely forced
(reported solved), a wider interval is reported underdetermined rather than
guessed, and an empty interval means the known tables admit no exact
completion at all (contradiction, reported with the offending lane).

When a lane contains exactly one unknown position this reduces to the closed
form d_u = r_{u-1} + r'_u with r run from the left and r' from the right;
the fixpoint handles the general case where a template reads the unknown
table at several positions per cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .checks import VerificationReport, Violation
from .sequences import RankPin, SequenceTemplate, check_sequence
from .spaces import SpaceDescriptor
from .tables import Quad, TriFilteredTable

# interval [lo, hi]; hi None means unbounded above
Interval = tuple[int, int | None]


def _ok(iv: Interval) -> bool:
    return iv[1] is None or iv[0] <= iv[1]


def _meet(a: Interval, b: Interval) -> Interval:
    if a[1] is None:
        hi = b[1]
    elif b[1] is None:
        hi = a[1]
    else:
        hi = min(a[1], b[1])
    return (max(a[0], b[0]), hi)


def _add(a: Interval, b: Interval) -> Interval:
    hi = None if a[1] is None or b[1] is None else a[1] + b[1]
    return (a[0] + b[0], hi)


def _sub(a: Interval, b: Interval) -> Interval:
    """{x - y : x in a, y in b} clamped into [0, inf); may come out empty."""
    lo = 0 if b[1] is None else max(0, a[0] - b[1])
    hi = None if a[1] is None else a[1] - b[0]
    return (lo, hi)


def support_box(space: SpaceDescriptor, degree: int | None = None) -> set[Quad]:
    """All index quadruples where a table of this space could be nonzero.

    Degree and lane windows come from the descriptor.  Weights of a degree-k
    structure lie in [0, 2k], sharpened to q = k for the smooth projective
    kinds and to one-sided windows for U and Uc; the Hodge index runs over
    the window a weight-q piece of H^k of a d-dimensional space allows.
    These are exactly the vanishing facts validate_table checks, so any
    valid table lives inside its box.
    """
    k_lo, k_hi = space.degree_range()
    if degree is not None:
        k_lo, k_hi = max(k_lo, degree), min(k_hi, degree)
    d = space.complex_dim
    box: set[Quad] = set()
    for k in range(k_lo, k_hi + 1):
        l_lo, l_hi = space.lane_range(k)
        if space.kind in ("Y", "Z"):
            q_range = range(k, k + 1)
        elif space.kind == "U":
            q_range = range(k, 2 * k + 1)
        elif space.kind == "Uc":
            q_range = range(0, k + 1)
        else:
            q_range = range(0, 2 * k + 1)
        for l in range(l_lo, l_hi + 1):
            for q in q_range:
                for p in range(max(0, q - k, q - d), min(q, k, d) + 1):
                    box.add((k, l, q, p))
    return box


@dataclass
class SolveResult:
    """Outcome of solve_unknown.

    ``table`` holds every determined cell (None after a contradiction);
    ``underdetermined`` lists cells whose interval stayed wider than a point,
    with the interval bounds; ``report`` carries the contradiction, or the
    final verification of the completed instance when fully determined.
    """

    table: TriFilteredTable | None
    determined: bool
    underdetermined: list[tuple[Quad, int, int | None]]
    report: VerificationReport
    iterations: int


def _parse_unknown(unknown) -> tuple[str, int | None]:
    if isinstance(unknown, str):
        return unknown, None
    try:
        tag, degree = unknown
        return str(tag), int(degree)
    except (TypeError, ValueError):
        raise ValueError(
            f"unknown must be a space tag or (tag, degree), got {unknown!r}") from None


def _infer_descriptor(tag: str, known: dict[str, TriFilteredTable]) -> SpaceDescriptor:
    if not known:
        raise ValueError("cannot infer the unknown table's descriptor from nothing")
    n = next(iter(known.values())).space.n
    m = None
    for t in known.values():
        if t.space.is_fibration_side:
            m = t.space.m
            break
    try:
        return SpaceDescriptor.parse_tag(tag, n, m)
    except ValueError:
        # degeneration-side tags reject m; retry bare
        return SpaceDescriptor.parse_tag(tag, n, None)


def solve_unknown(template: SequenceTemplate,
                  tables: dict[str, TriFilteredTable],
                  unknown,
                  pins: list[RankPin] = ()) -> SolveResult:
    """Solve for the one table marked unknown.

    ``unknown`` is a space tag, or (tag, degree) to solve only that
    cohomological degree while trusting the table's other degrees.  If the
    tables set still contains the unknown tag in a full solve, its stored
    entries are ignored; everything is rebuilt from the other tables.
    """
    tag, degree = _parse_unknown(unknown)
    if tag not in {t.space for t in template.terms}:
        raise ValueError(f"template {template.name!r} never references {tag!r}")
    known = dict(tables)
    stored = known.pop(tag, None)
    if degree is not None and stored is None:
        raise ValueError(
            f"partial solve for {tag} degree {degree} needs the table present "
            "to supply its other degrees")
    missing = [s for s in template.spaces() if s != tag and s not in known]
    if missing:
        raise ValueError(f"tables missing for {', '.join(missing)}")
    space = stored.space if stored is not None else _infer_descriptor(tag, known)
    box = support_box(space, degree)

    # -- assemble the lane system -----------------------------------------
    P = template.period
    T = len(template.terms)
    windows: dict[tuple[int, int, int, int], tuple[int, int]] = {}

    def touch(key, c):
        lo, hi = windows.get(key, (c, c))
        windows[key] = (min(lo, c), max(hi, c))

    for term in template.terms:
        if term.space == tag:
            for quad in box:
                c, l, q, p = term.lane_of_quad(quad)
                touch((c % P, l, q, p), c)
            if stored is not None and degree is not None:
                for quad in stored.entries:
                    if quad[0] != degree:
                        c, l, q, p = term.lane_of_quad(quad)
                        touch((c % P, l, q, p), c)
        else:
            for quad in known[term.space].entries:
                c, l, q, p = term.lane_of_quad(quad)
                touch((c % P, l, q, p), c)

    lanes: list[tuple[tuple[int, int, int, int], int, list]] = []
    for (res, l, q, p), (c_lo, c_hi) in sorted(windows.items()):
        cells: list = []
        keep = False
        for c in range(c_lo, c_hi + 1, P):
            for term in template.terms:
                quad = term.read_quad(c, l, q, p)
                if term.space == tag and (degree is None or quad[0] == degree):
                    if quad in box:
                        cells.append(quad)
                        keep = True
                    else:
                        cells.append(0)
                elif term.space == tag:
                    v = stored.dim(*quad)
                    cells.append(v)
                    keep = keep or v > 0
                else:
                    v = known[term.space].dim(*quad)
                    cells.append(v)
                    keep = keep or v > 0
        if keep:
            lanes.append(((res, l, q, p), c_lo, cells))

    # -- propagate to a fixpoint ------------------------------------------
    intervals: dict[Quad, Interval] = {quad: (0, None) for quad in box}
    extra_rank: dict[tuple[int, int], Interval] = {}

    def fail(lane_key, position, detail) -> SolveResult:
        res, l, q, p = lane_key
        rep = VerificationReport()
        rep.add(Violation(
            f"solve contradiction: {detail} "
            f"(lane (l={l}, q={q}, p={p}) residue {res})",
            lane=(l, q, p), position=position))
        return SolveResult(None, False, [], rep, iterations)

    iterations = 0
    while True:
        iterations += 1
        if iterations > 10000:
            raise RuntimeError("interval propagation failed to converge")
        changed = False
        boundary: list[list[Interval]] = []

        for li, (key, _c_lo, cells) in enumerate(lanes):
            vals = [intervals[c] if isinstance(c, tuple) else (c, c) for c in cells]
            n_pos = len(vals)
            F: list[Interval] = [(0, 0)]
            for i in range(n_pos):
                nxt = _sub(vals[i], F[i])
                cap = extra_rank.get((li, i + 1))
                if cap is not None:
                    nxt = _meet(nxt, cap)
                if not _ok(nxt):
                    return fail(key, i, "rank forced negative or above its pin")
                F.append(nxt)
            R: list[Interval] = [(0, 0)] * (n_pos + 1)
            last = _meet(F[n_pos], (0, 0))
            if not _ok(last):
                return fail(key, n_pos - 1, "chain cannot close")
            R[n_pos] = last
            for i in range(n_pos - 1, -1, -1):
                back = _meet(F[i], _sub(vals[i], R[i + 1]))
                if not _ok(back):
                    return fail(key, i, "forward and backward ranks incompatible")
                R[i] = back
            for i in range(n_pos):
                if not isinstance(cells[i], tuple):
                    continue
                tightened = _meet(intervals[cells[i]], _add(R[i], R[i + 1]))
                if not _ok(tightened):
                    return fail(key, i, f"cell {cells[i]} has no feasible dimension")
                if tightened != intervals[cells[i]]:
                    intervals[cells[i]] = tightened
                    changed = True
            boundary.append(R)

        for pin in pins:
            if not 0 <= pin.term_index < T:
                raise ValueError(f"pin names term {pin.term_index}, template has {T} terms")
            occ: list[tuple[int, int]] = []
            for li, (key, c_lo, cells) in enumerate(lanes):
                for j in range(len(cells)):
                    if j % T != pin.term_index:
                        continue
                    if pin.degree is not None:
                        c = c_lo + (j // T) * P
                        if c + template.terms[pin.term_index].k_offset != pin.degree:
                            continue
                    occ.append((li, j + 1))
            ivs = [boundary[li][j] for li, j in occ]
            lo_sum = sum(iv[0] for iv in ivs)
            hi_sum = None if any(iv[1] is None for iv in ivs) else sum(iv[1] for iv in ivs)
            if pin.rank < lo_sum or (hi_sum is not None and pin.rank > hi_sum):
                return fail(("*",) * 4 if not occ else lanes[occ[0][0]][0], None,
                            f"pinned rank {pin.rank} outside reachable "
                            f"[{lo_sum}, {hi_sum}]")
            for which, (li, j) in enumerate(occ):
                cur = boundary[li][j]
                others = [iv for w, iv in enumerate(ivs) if w != which]
                o_lo = sum(iv[0] for iv in others)
                o_hi = None if any(iv[1] is None for iv in others) else sum(iv[1] for iv in others)
                lo_new = cur[0] if o_hi is None else max(cur[0], pin.rank - o_hi)
                hi_new = pin.rank - o_lo if cur[1] is None else min(cur[1], pin.rank - o_lo)
                capped = (lo_new, hi_new)
                prev = extra_rank.get((li, j))
                if prev is None or _meet(prev, capped) != prev:
                    extra_rank[(li, j)] = capped if prev is None else _meet(prev, capped)
                    changed = True

        if not changed:
            break

    # -- collect ----------------------------------------------------------
    solved: dict[Quad, int] = {}
    under: list[tuple[Quad, int, int | None]] = []
    for quad in sorted(box):
        lo, hi = intervals[quad]
        if hi is not None and lo == hi:
            if lo > 0:
                solved[quad] = lo
        else:
            under.append((quad, lo, hi))

    if degree is not None:
        merged = {q: v for q, v in stored.entries.items() if q[0] != degree}
        merged.update(solved)
        solved = merged
    table = TriFilteredTable(space, solved)
    determined = not under
    report = VerificationReport()
    if determined:
        completed = dict(known)
        completed[tag] = table
        report = check_sequence(template, completed, pins=list(pins))
    return SolveResult(table, determined, under, report, iterations)
