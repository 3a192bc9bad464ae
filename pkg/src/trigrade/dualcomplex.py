"""Dual-complex counting for normal-crossings central fibres, and the
arithmetic of base change and Veronese re-embedding.

Only the two shapes that occur for K3 degenerations are modeled: a chain
(no triple points) and a triangulated sphere.  Base change by mu inserts
(mu-1) new components along every double curve and (mu-1)(mu-2)/2 at every
triple point; the edge and face counts are then recovered from the shape's
identities rather than tracked stratum by stratum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import (DegenerationFamily, EllipticCurveBase, FibrationFamily,
                      FiniteSurfaceBase, TypeII, TypeIII)

CHAIN = "chain"
SPHERE = "sphere"


@dataclass(frozen=True)
class DualComplexData:
    """Vertex / edge / face counts of the dual complex: components, double
    curves, triple points."""

    components: int
    double_curves: int
    triple_points: int
    topology: str

    def __post_init__(self):
        if self.components < 1 or self.double_curves < 0 or self.triple_points < 0:
            raise ValueError("counts out of range")
        if self.topology == CHAIN:
            if self.triple_points != 0 or self.double_curves != self.components - 1:
                raise ValueError(
                    f"not a chain: V={self.components}, E={self.double_curves}, "
                    f"F={self.triple_points}")
        elif self.topology == SPHERE:
            euler = self.components - self.double_curves + self.triple_points
            if euler != 2 or 3 * self.triple_points != 2 * self.double_curves:
                raise ValueError(
                    f"not a triangulated sphere: V={self.components}, "
                    f"E={self.double_curves}, F={self.triple_points}")
        else:
            raise ValueError(f"unknown topology {self.topology!r}")

    def to_json_obj(self) -> dict:
        return {
            "components": self.components,
            "double_curves": self.double_curves,
            "triple_points": self.triple_points,
            "topology": self.topology,
        }


def chain_counts(components: int) -> DualComplexData:
    return DualComplexData(components, components - 1, 0, CHAIN)


def type_iii_counts(triple_points: int) -> DualComplexData:
    """Sphere data from the triangle count 2k: (k+2, 3k, 2k)."""
    if triple_points <= 0 or triple_points % 2:
        raise ValueError(f"triple point count must be even and positive, "
                         f"got {triple_points}")
    k = triple_points // 2
    return DualComplexData(k + 2, 3 * k, 2 * k, SPHERE)


def base_change(d: DualComplexData, mu: int) -> DualComplexData:
    """Dual complex after a mu-fold base change.

    components' = V + (mu-1) E + (mu-1)(mu-2)/2 F; the other counts follow
    from the shape identities (E = V-1 on a chain; Euler 2 and 3F = 2E on
    the sphere).
    """
    if mu < 1:
        raise ValueError(f"need mu >= 1, got {mu}")
    v = (d.components + (mu - 1) * d.double_curves
         + (mu - 1) * (mu - 2) // 2 * d.triple_points)
    if d.topology == CHAIN:
        return chain_counts(v)
    return DualComplexData(v, 3 * (v - 2), 2 * (v - 2), SPHERE)


def veronese(f: FibrationFamily, mu: int) -> FibrationFamily:
    """Re-embed the base so the linear section scales: r fibres become
    mu*r; a genus g = k+1 curve becomes genus mu^2*k + 1."""
    if mu < 1:
        raise ValueError(f"need mu >= 1, got {mu}")
    if isinstance(f, EllipticCurveBase):
        return EllipticCurveBase(mu * f.r)
    if isinstance(f, FiniteSurfaceBase):
        return FiniteSurfaceBase(mu * mu * (f.g - 1) + 1)
    raise ValueError(f"not a fibration family: {f!r}")


def dual_complex(d: DegenerationFamily) -> DualComplexData:
    """The central fibre's dual complex: a chain of r+1 components for
    TypeII(r), the 2k-triangle sphere for TypeIII(k)."""
    if isinstance(d, TypeII):
        return chain_counts(d.r + 1)
    if isinstance(d, TypeIII):
        return type_iii_counts(2 * d.k)
    raise ValueError(f"not a degeneration family: {d!r}")


def base_changed_family(d: DegenerationFamily, mu: int) -> DegenerationFamily:
    """The degeneration family after a mu-fold base change, so that its
    dual complex matches base_change of the original's."""
    if mu < 1:
        raise ValueError(f"need mu >= 1, got {mu}")
    if isinstance(d, TypeII):
        return TypeII(mu * d.r)
    if isinstance(d, TypeIII):
        return TypeIII(mu * mu * d.k)
    raise ValueError(f"not a degeneration family: {d!r}")
