"""The weighted Grassmannian of planes in four-space, as a Pluecker
hypersurface in a weighted projective five-space.

Input is a tuple (a_0, a_1, a_2, a_3) with a_i + a_j > a_0 for all pairs; the
six Pluecker coordinates T_ij (0 <= i < j <= 3) carry the weights
-a_0 + a_i + a_j, all positive under the standing hypothesis, and the variety
is cut out by the Pluecker relation

    T01*T23 + T12*T03 - T02*T13 = 0,

which is weighted-homogeneous of degree p = -a_0 + a_1 + a_2 + a_3.  The
anticanonical degrees are 3p for the ambient space and 2p for the
hypersurface; a degree-d hypersurface section is a codimension-two complete
intersection of multidegree (d, p) with anticanonical degree 2p - d.

General type is decided by the sign of that adjunction value (negative
anticanonical degree), the same classification the rest of the toolkit uses
for weighted complete intersections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groebner import Budget, Ideal, krull_dim
from .rings import Poly, parse_poly, weighted_degree
from .wps import (
    EMPTY,
    Stratum,
    WeightedSpace,
    _projective_dim,
    is_well_formed_space,
    kodaira_class_of,
    make_space,
    singular_strata,
)

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class HypothesisError(ValueError):
    """The standing inequality a_i + a_j > a_0 fails for some pair."""


@dataclass(frozen=True)
class WGrData:
    input_weights: tuple[int, int, int, int]
    plucker_weights: tuple[int, ...]
    ambient: WeightedSpace
    plucker_poly: Poly
    plucker_degree: int
    antican_P: int
    antican_Y: int
    ambient_well_formed: bool


@dataclass(frozen=True)
class WGrHypersurfaceReport:
    degree: int
    antican_X: int
    kodaira_class: str
    general_type: bool
    multidegree: tuple[int, int]
    degree_equals_plucker: bool


def build_wgr24(a) -> WGrData:
    a = tuple(a)
    if len(a) != 4:
        raise ValueError("expected four input weights")
    for i, j in itertools.combinations(range(4), 2):
        if a[i] + a[j] <= a[0]:
            raise HypothesisError(
                f"a_{i} + a_{j} = {a[i] + a[j]} <= a_0 = {a[0]}")
    weights = tuple(-a[0] + a[i] + a[j] for i, j in PAIRS)
    names = tuple(f"T{i}{j}" for i, j in PAIRS)
    ambient = make_space(weights, names)
    plucker = parse_poly("T01*T23 + T12*T03 - T02*T13", ambient.ring)
    degree = -a[0] + a[1] + a[2] + a[3]
    monomial_degrees = {ambient.ring.degree_of(m) for m in plucker.terms}
    assert monomial_degrees == {degree}, "Pluecker monomials disagree in degree"
    antican_p = 3 * degree
    assert sum(weights) == antican_p, "weight total disagrees with 3p"
    return WGrData(
        input_weights=a,
        plucker_weights=weights,
        ambient=ambient,
        plucker_poly=plucker,
        plucker_degree=degree,
        antican_P=antican_p,
        antican_Y=2 * degree,
        ambient_well_formed=is_well_formed_space(ambient),
    )


def _stratum_section_dim(G: WGrData, stratum: Stratum, budget: Budget | None):
    ring = G.ambient.ring
    cut = [Poly.variable(ring, ring.variables[i])
           for i in range(ring.nvars) if i not in stratum.support]
    return _projective_dim(Ideal(ring, (G.plucker_poly,) + tuple(cut)), budget)


def wgr_wellformed(G: WGrData, budget: Budget | None = None) -> bool:
    """Ambient well-formed and the hypersurface meets each singular stratum
    in codimension at least two (dimensions via Krull dimension of cones)."""
    if not G.ambient_well_formed:
        return False
    dim_y = krull_dim(Ideal(G.ambient.ring, (G.plucker_poly,)), budget=budget) - 1
    assert dim_y == 4
    for stratum in singular_strata(G.ambient):
        section = _stratum_section_dim(G, stratum, budget)
        if section is not EMPTY and dim_y - section < 2:
            return False
    return True


def wgr_hypersurface_report(G: WGrData, d: int) -> WGrHypersurfaceReport:
    """Adjunction bookkeeping for a degree-d hypersurface section.

    The section is a complete intersection of multidegree (d, p) in the
    six-variable ambient ring; supplying an explicit witness polynomial to
    the geometric checks is up to the caller.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    antican_x = G.antican_Y - d
    assert antican_x == sum(G.plucker_weights) - G.plucker_degree - d
    return WGrHypersurfaceReport(
        degree=d,
        antican_X=antican_x,
        kodaira_class=kodaira_class_of(-antican_x),
        general_type=antican_x < 0,
        multidegree=(d, G.plucker_degree),
        degree_equals_plucker=d == G.plucker_degree,
    )


def enumerate_wgr_general_type(max_a: int, max_d: int, budget: Budget | None = None):
    """All well-formed general-type instances in the bounded grid.

    Tuples are canonicalised by sorting a_1 <= a_2 <= a_3 (a_0 is kept
    distinguished since it enters the weights asymmetrically); results are
    sorted by (a, d).
    """
    if max_a < 1 or max_d < 1:
        raise ValueError("bounds must be positive")
    results = []
    for a0 in range(1, max_a + 1):
        for rest in itertools.combinations_with_replacement(range(1, max_a + 1), 3):
            a = (a0,) + rest
            try:
                G = build_wgr24(a)
            except HypothesisError:
                continue
            if not G.ambient_well_formed or not wgr_wellformed(G, budget):
                continue
            for d in range(1, max_d + 1):
                report = wgr_hypersurface_report(G, d)
                if report.general_type:
                    results.append((a, d, report))
    results.sort(key=lambda entry: (entry[0], entry[1]))
    return results
