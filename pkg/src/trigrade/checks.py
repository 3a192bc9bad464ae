"""Single-table checks: support windows, duality, Lefschetz pairing,
restriction to linear sections.

All checks return a VerificationReport rather than raising, so callers can collect every
violation at once.  Raising is reserved for malformed input (missing tables,
bad tags), which surfaces as ValueError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .spaces import SpaceDescriptor
from .tables import Quad, TriFilteredTable


@dataclass(frozen=True)
class Violation:
    """One failed relation.  ``entry`` localizes table checks; ``lane`` and
    ``position`` localize sequence checks."""

    relation: str
    space: str | None = None
    entry: Quad | None = None
    lane: tuple[int, int, int] | None = None
    position: int | None = None

    def to_json_obj(self) -> dict:
        obj: dict = {"relation": self.relation}
        if self.space is not None:
            obj["space"] = self.space
        if self.entry is not None:
            k, l, q, p = self.entry
            obj["entry"] = {"k": k, "l": l, "q": q, "p": p}
        if self.lane is not None:
            l, q, p = self.lane
            obj["lane"] = {"l": l, "q": q, "p": p}
        if self.position is not None:
            obj["position"] = self.position
        return obj


@dataclass
class VerificationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, violation: Violation):
        self.violations.append(violation)

    def extend(self, other: "VerificationReport"):
        self.violations.extend(other.violations)

    def to_json_obj(self) -> dict:
        return {
            "pass": self.passed,
            "violations": [v.to_json_obj() for v in self.violations],
        }


def validate_table(table: TriFilteredTable) -> VerificationReport:
    """Check every entry against the support windows of its space.

    Covered: the degree window of the space, the perverse lane window in each
    degree, weights in [0, 2k] sharpened by purity for the smooth projective
    kinds (Y, Z) and by the one-sided weight bounds for U and Uc, and the
    Hodge index window of a degree-k structure on a d-dimensional space.
    Nonnegativity of dimensions needs no check; construction enforces it.
    """
    rep = VerificationReport()
    sp = table.space
    d = sp.complex_dim
    k_lo, k_hi = sp.degree_range()
    for (k, l, q, p), _dim in table.sorted_entries():
        where = dict(space=sp.tag, entry=(k, l, q, p))
        if not k_lo <= k <= k_hi:
            rep.add(Violation(
                f"degree window: k={k} outside [{k_lo}, {k_hi}] for {sp.tag}",
                **where))
            continue
        l_lo, l_hi = sp.lane_range(k)
        if not l_lo <= l <= l_hi:
            rep.add(Violation(
                f"lane window: l={l} outside [{l_lo}, {l_hi}] in degree {k} for {sp.tag}",
                **where))
        if sp.kind in ("Y", "Z"):
            if q != k:
                rep.add(Violation(
                    f"purity: weight q={q} != k={k} on smooth projective {sp.tag}",
                    **where))
        elif sp.kind == "U" and not k <= q <= 2 * k:
            rep.add(Violation(
                f"weight window: q={q} outside [{k}, {2 * k}] on open {sp.tag}",
                **where))
        elif sp.kind == "Uc" and not 0 <= q <= k:
            rep.add(Violation(
                f"weight window: q={q} outside [0, {k}] on compactly supported {sp.tag}",
                **where))
        elif not 0 <= q <= 2 * k:
            rep.add(Violation(
                f"weight window: q={q} outside [0, {2 * k}]", **where))
        p_lo = max(0, q - k, q - d)
        p_hi = min(q, k, d)
        if not p_lo <= p <= p_hi:
            rep.add(Violation(
                f"Hodge window: p={p} outside [{p_lo}, {p_hi}] for weight {q} in degree {k}",
                **where))
    return rep


def poincare_verdier_dual(table: TriFilteredTable) -> TriFilteredTable:
    """The dual table, for fibration-side spaces.

    With d the complex dimension of the space itself, the entry at (k,l,q,p)
    of the dual equals the entry at (2d-k, 2d-l, 2d-q, d-p) of the input; the
    space swaps with its dual partner (U with Uc, Y and the sections with
    themselves).  The perverse center being 2d-l encodes that each space's
    perverse structure is centered at its own dimension; for a depth-r
    section the center drops by r with the dimension.  Degeneration-side
    tables carry a different pairing and are rejected.
    """
    if not table.space.is_fibration_side:
        raise ValueError(
            f"duality is defined here for Y, Z, U, Uc only, not {table.space.tag}")
    return dualize_in_dimension(table, table.space.complex_dim)


def dualize_in_dimension(table: TriFilteredTable, d: int) -> TriFilteredTable:
    """Index-level duality about dimension d, retagging to the dual space."""
    moved = {
        (2 * d - k, 2 * d - l, 2 * d - q, d - p): v
        for (k, l, q, p), v in table.entries.items()
    }
    return TriFilteredTable(table.space.dual(), moved)


def lefschetz_partner(quad: Quad, d: int) -> Quad:
    """Index pairing of the relative Lefschetz isomorphism: lane l in degree
    k pairs with lane 2d-l in degree k+2(d-l), with a twist by d-l.  An
    involution on quadruples."""
    k, l, q, p = quad
    return (2 * d + k - 2 * l, 2 * d - l, q + 2 * (d - l), p + (d - l))


def hard_lefschetz_check(table: TriFilteredTable) -> VerificationReport:
    """Check the dimension symmetry dim(e) == dim(partner(e)) for all entries.

    Scanning entries suffices for both directions: a nonzero partner of a
    zero entry is itself an entry whose partner mismatches.
    """
    rep = VerificationReport()
    d = table.space.complex_dim
    for quad, v in table.sorted_entries():
        partner = lefschetz_partner(quad, d)
        w = table.dim(*partner)
        if w != v:
            rep.add(Violation(
                f"hard Lefschetz pairing: dim{quad} = {v} but partner dim{partner} = {w}",
                space=table.space.tag, entry=quad))
    return rep


def reindex_cup_filtration(table: TriFilteredTable) -> TriFilteredTable:
    """Reindex so the lane slot carries the cup-product filtration index.

    The cup filtration in degree k is the perverse one shifted by k - n:
    output(k, l, q, p) = input(k, l + k - n, q, p).
    """
    n = table.space.n
    moved = {
        (k, l - k + n, q, p): v for (k, l, q, p), v in table.entries.items()
    }
    return TriFilteredTable(table.space, moved)


def _section_map(sections) -> dict[int, TriFilteredTable]:
    by_depth: dict[int, TriFilteredTable] = {}
    if isinstance(sections, Mapping):
        sections = sections.values()
    for t in sections:
        if t.space.kind != "Z":
            continue
        by_depth[t.space.depth] = t
    return by_depth


def check_subvariety_constraints(
    table_y: TriFilteredTable,
    sections: Mapping[str, TriFilteredTable] | Iterable[TriFilteredTable],
) -> VerificationReport:
    """Relate off-center lanes of a fibred space to its linear sections.

    For an entry of Y at (k,l,q,p):

    * lanes below center (l < k): the comparison with the depth-r section is
      an isomorphism on this graded piece for r < k-l, reading the section at
      (k-2r, l-r, q-2r, p-r); at r = k-l it is onto the Y piece, so the
      section entry must be at least the Y entry.
    * lanes above center (l > k): the comparison map is an isomorphism for
      r < l-k at (k, l-r, q, p), and injective out of the Y piece at
      r = l-k, so the Y entry is at most the section entry.

    A needed depth with no section table supplied is an input error naming
    the depth.
    """
    rep = VerificationReport()
    by_depth = _section_map(sections)
    for (k, l, q, p), v in table_y.sorted_entries():
        if l == k:
            continue
        gap = abs(l - k)
        for r in range(1, gap + 1):
            if r not in by_depth:
                raise ValueError(
                    f"subvariety constraints need a depth-{r} section table "
                    f"(entry at {(k, l, q, p)} sits {gap} lanes off center)")
            z = by_depth[r]
            if l < k:
                zq = (k - 2 * r, l - r, q - 2 * r, p - r)
            else:
                zq = (k, l - r, q, p)
            zv = z.dim(*zq)
            where = dict(space=table_y.space.tag, entry=(k, l, q, p))
            if r < gap:
                if zv != v:
                    rep.add(Violation(
                        f"section restriction (depth {r}) is an isomorphism here: "
                        f"Y{(k, l, q, p)} = {v} but Z:{r}{zq} = {zv}", **where))
            elif l < k:
                if zv < v:
                    rep.add(Violation(
                        f"section restriction (depth {r}) is onto here: "
                        f"Y{(k, l, q, p)} = {v} exceeds Z:{r}{zq} = {zv}", **where))
            else:
                if v > zv:
                    rep.add(Violation(
                        f"section restriction (depth {r}) is injective here: "
                        f"Y{(k, l, q, p)} = {v} exceeds Z:{r}{zq} = {zv}", **where))
    return rep
