"""Weighted projective spaces and the geometric battery for weighted
complete intersections.

A weighted projective space P(a_0, ..., a_N) is Proj of the polynomial ring
graded by the positive weights a_i.  Its singular locus is the union of the
closed coordinate strata whose weight gcd exceeds 1; every check here reduces
to exact Groebner computations on the affine cone.

Dimension convention: projective dimensions are affine-cone dimensions minus
one, and the empty subscheme is encoded by the distinguished value ``EMPTY``
(float('-inf')), never by -1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .groebner import (
    Budget,
    Ideal,
    hilbert_component_dim,
    is_regular_sequence,
    krull_dim,
)
from .rings import GradedRing, Poly, make_ring, weighted_degree

EMPTY = float("-inf")


class NotCompleteIntersectionError(ValueError):
    """The generators do not form a regular sequence of the expected length."""


class AmbientNotWellFormedError(ValueError):
    """The operation requires a well-formed ambient space."""


@dataclass(frozen=True)
class WeightedSpace:
    """Weight tuple with its coordinate ring and Picard index m = lcm(a_i)."""

    weights: tuple[int, ...]
    picard_index: int
    ring: GradedRing


def make_space(weights, names=None) -> WeightedSpace:
    weights = tuple(weights)
    if len(weights) < 2:
        raise ValueError("a weighted projective space needs at least two weights")
    if names is None:
        names = tuple(f"x{i}" for i in range(len(weights)))
    ring = make_ring(names, weights)
    return WeightedSpace(weights, math.lcm(*weights), ring)


@dataclass(frozen=True)
class Stratum:
    """A maximal coordinate locus with nontrivial stabiliser.

    ``support`` lists the variable indices allowed to be nonzero; the locus
    is cut out by the complementary variables.  ``gcd_value`` is the common
    divisor of the supported weights (the stabiliser order along the open
    part of the stratum), always > 1.
    """

    support: tuple[int, ...]
    gcd_value: int


@dataclass(frozen=True)
class WciData:
    """A weighted complete intersection candidate: explicit generators."""

    space: WeightedSpace
    gens: tuple[Poly, ...]
    multidegree: tuple[int, ...]


def make_wci(space: WeightedSpace, gens) -> WciData:
    gens = tuple(gens)
    if not gens:
        raise ValueError("a complete intersection needs at least one generator")
    degrees = []
    for g in gens:
        if g.ring != space.ring:
            raise ValueError("generator in a different ring")
        d = weighted_degree(g)
        if d is None:
            raise ValueError(f"inhomogeneous generator {g}")
        if d < 1:
            raise ValueError("generators must have positive degree")
        degrees.append(d)
    return WciData(space, gens, tuple(degrees))


@dataclass(frozen=True)
class CanonicalReport:
    """Adjunction-degree bookkeeping with validity markers.

    ``canonical_degree`` is sum(d_j) - sum(a_i); its sign classifies the
    canonical sheaf (positive: general type, zero: calabi-yau, negative:
    fano).  ``h0_O1`` counts weight-one variables and only identifies the
    space of degree-one sections when ``h0_valid`` is set (quasi-smooth,
    well-formed, non-degenerate).
    """

    canonical_degree: int
    kodaira_class: str
    h0_O1: int
    linear_system_dim: int
    linear_cone: bool
    degenerate: bool
    well_formed: bool
    quasi_smooth: bool
    h0_valid: bool


def kodaira_class_of(canonical_degree: int) -> str:
    if canonical_degree > 0:
        return "general-type"
    if canonical_degree == 0:
        return "calabi-yau"
    return "fano"


# ---------------------------------------------------------------------------
# ambient combinatorics
# ---------------------------------------------------------------------------

def is_well_formed_space(space: WeightedSpace) -> bool:
    """Every N of the N+1 weights must be coprime."""
    weights = space.weights
    for omit in range(len(weights)):
        rest = weights[:omit] + weights[omit + 1:]
        if math.gcd(*rest) != 1:
            return False
    return True


def singular_strata(space: WeightedSpace) -> list[Stratum]:
    """Maximal supports with weight gcd > 1, each listed with its gcd.

    A support S is listed when every strictly larger support has a strictly
    smaller gcd, so the same locus can appear inside a bigger stratum when
    its stabiliser is strictly bigger (a point of order 6 inside a line of
    order 3, for instance).
    """
    if not is_well_formed_space(space):
        raise AmbientNotWellFormedError(f"space {space.weights} is not well-formed")
    weights = space.weights
    n = len(weights)
    strata = []
    indices = range(n)
    for size in range(1, n + 1):
        for subset in itertools.combinations(indices, size):
            g = math.gcd(*(weights[i] for i in subset))
            if g <= 1:
                continue
            others = [j for j in indices if j not in subset]
            if all(math.gcd(g, weights[j]) < g for j in others):
                strata.append(Stratum(subset, g))
    strata.sort(key=lambda s: s.support)
    return strata


# ---------------------------------------------------------------------------
# cone dimensions
# ---------------------------------------------------------------------------

def _projective_dim(I: Ideal, budget: Budget | None = None):
    """Projective dimension of V(I), or EMPTY when the cone is at most the origin."""
    dim = krull_dim(I, budget=budget)
    if dim <= 0:
        return EMPTY
    return dim - 1


def _stratum_ideal(X: WciData, stratum: Stratum) -> Ideal:
    ring = X.space.ring
    cut = [Poly.variable(ring, ring.variables[i])
           for i in range(ring.nvars) if i not in stratum.support]
    return Ideal(ring, X.gens + tuple(cut))


def _jacobian_minor_ideal(X: WciData) -> Ideal:
    """Generators plus all c x c minors of the Jacobian matrix."""
    from .rings import partial_derivative

    ring = X.space.ring
    c = len(X.gens)
    jac = [[partial_derivative(f, v) for v in ring.variables] for f in X.gens]
    minors = []
    for cols in itertools.combinations(range(ring.nvars), c):
        det = _det([[jac[r][col] for col in cols] for r in range(c)], ring)
        if not det.is_zero():
            minors.append(det)
    return Ideal(ring, X.gens + tuple(minors))


def _det(matrix, ring: GradedRing) -> Poly:
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = Poly.zero(ring)
    for col in range(size):
        entry = matrix[0][col]
        if entry.is_zero():
            continue
        minor = [[row[c] for c in range(size) if c != col] for row in matrix[1:]]
        cofactor = entry * _det(minor, ring)
        total = total + cofactor if col % 2 == 0 else total - cofactor
    return total


# ---------------------------------------------------------------------------
# the geometric checks
# ---------------------------------------------------------------------------

def is_quasi_smooth(X: WciData, budget: Budget | None = None) -> bool:
    """Smoothness of the affine cone away from the origin.

    Jacobian criterion for complete-intersection-shaped input: the singular
    locus of the cone is V(I + c-minors of the Jacobian); quasi-smooth means
    that locus is at most the origin.  Inputs whose generators fail to be a
    regular sequence are rejected: the criterion presumes codimension c.
    """
    if not is_regular_sequence(X.gens, X.space.ring, budget):
        raise NotCompleteIntersectionError(
            "generators are not a regular sequence; the Jacobian-minor "
            "criterion needs complete-intersection input")
    singular = _jacobian_minor_ideal(X)
    return krull_dim(singular, budget=budget) <= 0


def is_well_formed_subscheme(X: WciData, budget: Budget | None = None) -> bool:
    """codim_X of (X ∩ singular locus of the ambient) is at least 2."""
    if not is_well_formed_space(X.space):
        raise AmbientNotWellFormedError(
            f"ambient space {X.space.weights} is not well-formed")
    I = Ideal(X.space.ring, X.gens)
    dim_x = _projective_dim(I, budget)
    if dim_x is EMPTY:
        raise ValueError("the subscheme is empty")
    worst = EMPTY
    for stratum in singular_strata(X.space):
        worst = max(worst, _projective_dim(_stratum_ideal(X, stratum), budget))
    return dim_x - worst >= 2


def is_smooth_well_formed(X: WciData, budget: Budget | None = None) -> bool:
    """Smooth and well-formed: quasi-smooth and disjoint from the ambient
    singular locus (for a well-formed ambient space)."""
    if not is_well_formed_space(X.space):
        return False
    if not is_quasi_smooth(X, budget):
        return False
    for stratum in singular_strata(X.space):
        if _projective_dim(_stratum_ideal(X, stratum), budget) is not EMPTY:
            return False
    return True


def canonical_report(X: WciData, budget: Budget | None = None) -> CanonicalReport:
    space = X.space
    alpha = sum(X.multidegree) - sum(space.weights)
    linear_cone = any(a == d for a in space.weights for d in X.multidegree)
    degenerate = any(d == 1 for d in X.multidegree)
    wf_space = is_well_formed_space(space)
    try:
        qs = is_quasi_smooth(X, budget)
    except NotCompleteIntersectionError:
        qs = False
    wf = wf_space and is_well_formed_subscheme(X, budget) if wf_space else False
    h0 = sum(1 for a in space.weights if a == 1)
    return CanonicalReport(
        canonical_degree=alpha,
        kodaira_class=kodaira_class_of(alpha),
        h0_O1=h0,
        linear_system_dim=h0 - 1,
        linear_cone=linear_cone,
        degenerate=degenerate,
        well_formed=wf,
        quasi_smooth=qs,
        h0_valid=qs and wf and not degenerate,
    )


def hilbert_h0(space: WeightedSpace, degree: int) -> int:
    """Sections of O(degree) on the ambient: monomial count via Hilbert values."""
    return hilbert_component_dim(Ideal(space.ring, ()), degree)


# ---------------------------------------------------------------------------
# combinatorial candidate enumeration
# ---------------------------------------------------------------------------

def enumerate_candidates(max_weight: int, max_codim: int, dim: int, predicate: str,
                         max_degree_sum: int | None = None):
    """All (weights, multidegree) pairs passing the combinatorial filters.

    Purely combinatorial: ambient well-formed, no degree equal to a weight
    (linear cone), no degree one (degenerate), canonical class sign matching
    ``predicate`` (one of general-type / calabi-yau / fano).  No polynomial
    witness is checked.  Degrees range over sorted tuples with total at most
    ``max_degree_sum`` (default: twice the weight total of the candidate).
    """
    if predicate not in ("general-type", "calabi-yau", "fano"):
        raise ValueError(f"unknown canonical class filter {predicate!r}")
    if max_weight < 1 or max_codim < 1 or dim < 1:
        raise ValueError("bounds must be positive")
    results = []
    for codim in range(1, max_codim + 1):
        nvars = dim + codim + 1
        for weights in itertools.combinations_with_replacement(range(1, max_weight + 1), nvars):
            space = make_space(weights)
            if not is_well_formed_space(space):
                continue
            total_a = sum(weights)
            bound = max_degree_sum if max_degree_sum is not None else 2 * total_a
            for degrees in itertools.combinations_with_replacement(range(2, bound + 1), codim):
                if sum(degrees) > bound:
                    continue
                if any(d in weights for d in degrees):
                    continue
                alpha = sum(degrees) - total_a
                if kodaira_class_of(alpha) != predicate:
                    continue
                results.append((weights, degrees))
    results.sort()
    return results
