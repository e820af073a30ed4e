"""Bigraded Jacobi rings and the infinitesimal Torelli test.

For a weighted complete intersection cut out by a regular sequence
f_1, ..., f_c of degrees d_j inside variables x_0, ..., x_N of weights a_i,
set F = sum_j y_j f_j in the enlarged ring C[x; y] and take the quotient by
all partials of F (the partials with respect to y_j are the f_j themselves).
The quotient is bigraded by

    deg(x_i) = (0, a_i),       deg(y_j) = (1, -d_j),

the unique bigrading with F bihomogeneous of bidegree (1, 0); the report
header restates this convention.  Writing S = sum(a_i) - sum(d_j), the space
of first-order deformations is the (1, 0) component and the Hodge-theoretic
components sit in bidegrees (q, -S).  The Torelli map sends r in the (1, 0)
component to the package of multiplication operators between consecutive
(q, -S) components; injectivity of that linear map is the infinitesimal
Torelli property, decided here by exact rank computation.

Component dimensions are computed two independent ways: as standard-monomial
counts against a Groebner basis, and (oracle route) as corank of the span of
generator multiples inside the finite coordinate space of a bidegree, with no
Groebner basis involved.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .groebner import (
    Budget,
    DEFAULT_BUDGET,
    Ideal,
    MonomialOrder,
    ResourceLimitError,
    block_order,
    normal_form,
)
from .linalg import RankAccumulator
from .rings import (
    GradedRing,
    Poly,
    mono_divides,
    mono_mul,
    monomials_of_degree,
    partial_derivative,
    second_weighted_degree,
    weighted_degree,
)
from .wps import NotCompleteIntersectionError, WciData, is_quasi_smooth, is_smooth_well_formed

GRADING_NOTE = "bigrading: deg(x_i) = (0, a_i), deg(y_j) = (1, -d_j)"


@dataclass(eq=False)
class JacobiRing:
    """The bigraded Jacobi ring data of a complete intersection."""

    base: WciData
    ambient: GradedRing
    F: Poly
    jacobian_ideal: Ideal
    S: int
    order: MonomialOrder
    n_x: int
    n_y: int

    @property
    def dim_x(self) -> int:
        """Dimension of the intersection itself (N - c)."""
        return self.n_x - 1 - self.n_y


@dataclass(frozen=True)
class TorelliReport:
    dims: dict
    psi_domain_dim: int
    kernel_dim: int
    injective: bool
    vacuous: bool
    s_value: int
    q_range: tuple[int, ...]
    grading_note: str = GRADING_NOTE


def _y_names(x_names, c: int) -> list[str]:
    prefix = "y"
    while any(f"{prefix}{j}" in x_names for j in range(1, c + 1)):
        prefix += "y"
    return [f"{prefix}{j}" for j in range(1, c + 1)]


def build_jacobi(X: WciData, budget: Budget | None = None, check_geometry: bool = True) -> JacobiRing:
    """Construct the bigraded ambient ring, F, and the Jacobian ideal basis.

    The geometric hypotheses (quasi-smooth, smooth and well-formed) are
    advisory for the construction: violations emit a warning and the ring is
    built anyway.
    """
    budget = budget or DEFAULT_BUDGET
    space = X.space
    c = len(X.gens)
    n = space.ring.nvars

    if check_geometry:
        try:
            if not is_quasi_smooth(X, budget):
                warnings.warn("input is not quasi-smooth; Jacobi components may "
                              "not have Hodge-theoretic meaning", stacklevel=2)
            elif not is_smooth_well_formed(X, budget):
                warnings.warn("input is not smooth well-formed; Jacobi components "
                              "may not have Hodge-theoretic meaning", stacklevel=2)
        except NotCompleteIntersectionError:
            warnings.warn("generators are not a regular sequence; Jacobi ring is "
                          "formal bookkeeping only", stacklevel=2)

    names = tuple(space.ring.variables) + tuple(_y_names(space.ring.variables, c))
    first = (0,) * n + (1,) * c
    second = tuple(space.weights) + tuple(-d for d in X.multidegree)
    ambient = GradedRing(names, first, second)

    # order: y-block first, weighted grevlex inside each block
    degree_weights = tuple(space.weights) + (1,) * c
    order = block_order(ambient, block1=tuple(range(n, n + c)), degree_weights=degree_weights)

    lifted = [Poly(ambient, {m + (0,) * c: coeff for m, coeff in f.terms.items()})
              for f in X.gens]
    F = Poly.zero(ambient)
    for j, f in enumerate(lifted):
        F = F + f * Poly.variable(ambient, names[n + j])

    partials = [partial_derivative(F, names[i]) for i in range(n)]
    gens = tuple(p for p in partials if not p.is_zero()) + tuple(lifted)
    jac = Ideal(ambient, gens)
    jac.basis(order, budget)

    return JacobiRing(
        base=X,
        ambient=ambient,
        F=F,
        jacobian_ideal=jac,
        S=sum(space.weights) - sum(X.multidegree),
        order=order,
        n_x=n,
        n_y=c,
    )


# ---------------------------------------------------------------------------
# bidegree bookkeeping
# ---------------------------------------------------------------------------

def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def component_monomials(J: JacobiRing, q: int, t: int) -> list[tuple[int, ...]]:
    """All ambient monomials of bidegree (q, t), in a fixed sorted order."""
    if q < 0:
        raise ValueError("y-degree must be nonnegative")
    x_weights = J.base.space.weights
    degrees = J.base.multidegree
    out = []
    for split in _compositions(q, J.n_y):
        x_deg = t + sum(d * e for d, e in zip(degrees, split))
        if x_deg < 0:
            continue
        for x_mono in monomials_of_degree(x_weights, x_deg):
            out.append(x_mono + split)
    out.sort()
    return out


def bidegree(p: Poly) -> tuple[int, int]:
    """Bidegree of a bihomogeneous polynomial in the Jacobi ambient ring."""
    q = weighted_degree(p)
    t = second_weighted_degree(p)
    if q is None or t is None:
        raise ValueError("polynomial is not bihomogeneous")
    return q, t


def standard_component_monomials(J: JacobiRing, q: int, t: int,
                                 budget: Budget | None = None) -> list[tuple[int, ...]]:
    """Monomials of bidegree (q, t) outside the leading-term ideal."""
    basis = J.jacobian_ideal.basis(J.order, budget)
    key = J.order.key
    leads = [max(g.terms, key=key) for g in basis]
    return [m for m in component_monomials(J, q, t)
            if not any(mono_divides(lm, m) for lm in leads)]


def component_dim(J: JacobiRing, q: int, t: int, budget: Budget | None = None) -> int:
    """Dimension of the (q, t) component, counted through the Groebner basis."""
    return len(standard_component_monomials(J, q, t, budget))


def component_dim_oracle(J: JacobiRing, q: int, t: int,
                         max_monomials: int = 50_000) -> int:
    """The same dimension without Groebner bases: exact corank of the span of
    generator multiples inside the coordinate space of the bidegree."""
    if q < 0:
        raise ValueError("y-degree must be nonnegative")
    target = component_monomials(J, q, t)
    if len(target) > max_monomials:
        raise ResourceLimitError(
            f"component has {len(target)} monomials, above the budget {max_monomials}")
    index = {m: i for i, m in enumerate(target)}
    acc = RankAccumulator()
    rows = 0
    for g in J.jacobian_ideal.generators:
        gq, gt = bidegree(g)
        if gq > q:
            continue
        for mu in component_monomials(J, q - gq, t - gt):
            row: dict[int, Fraction] = {}
            for gm, gc in g.terms.items():
                col = index[mono_mul(gm, mu)]
                new = row.get(col, 0) + gc
                if new:
                    row[col] = new
                else:
                    row.pop(col, None)
            rows += 1
            if rows > max_monomials:
                raise ResourceLimitError("row budget exceeded in oracle rank computation")
            acc.add_row(row)
    return len(target) - acc.rank


# ---------------------------------------------------------------------------
# the Torelli test
# ---------------------------------------------------------------------------

def torelli_test(J: JacobiRing, budget: Budget | None = None,
                 extra_components=()) -> TorelliReport:
    """Assemble the multiplication maps out of the (1, 0) component and
    return the exact kernel dimension of their direct sum.

    Requires S < 0 (positive canonical degree, the general-type range).  The
    direct sum runs over every q between 1 and dim(X) + 1 whose source and
    target components are both nonzero; when no q qualifies the map is the
    zero map and injectivity reduces to the domain being zero (vacuous case,
    flagged in the report).
    """
    budget = budget or DEFAULT_BUDGET
    if J.S >= 0:
        raise ValueError(
            f"torelli_test needs negative S (general type); got S = {J.S}")
    minus_s = -J.S
    domain = standard_component_monomials(J, 1, 0, budget)
    dims = {(1, 0): len(domain)}

    components = {}
    for q in range(0, J.dim_x + 2):
        components[q] = standard_component_monomials(J, q, minus_s, budget)
        dims[(q, minus_s)] = len(components[q])
    for (q, t) in extra_components:
        dims[(q, t)] = component_dim(J, q, t, budget)

    q_range = tuple(q for q in range(1, J.dim_x + 2)
                    if dims[(q - 1, minus_s)] > 0 and dims[(q, minus_s)] > 0)
    vacuous = not q_range

    nf_cache: dict[tuple, Poly] = {}

    def nf_of_mono(mono) -> Poly:
        cached = nf_cache.get(mono)
        if cached is None:
            cached = normal_form(Poly.monomial(J.ambient, mono), J.jacobian_ideal,
                                 J.order, budget)
            nf_cache[mono] = cached
        return cached

    ncols = len(domain)
    acc = RankAccumulator()
    for q in q_range:
        source = components[q - 1]
        target_index = {m: i for i, m in enumerate(components[q])}
        for a in source:
            if acc.rank == ncols:
                break
            rows: dict[int, dict[int, Fraction]] = {}
            for k, r in enumerate(domain):
                nf = nf_of_mono(mono_mul(r, a))
                for mono, coeff in nf.terms.items():
                    rows.setdefault(target_index[mono], {})[k] = coeff
            for row_key in sorted(rows):
                acc.add_row(rows[row_key])
                if acc.rank == ncols:
                    break
        if acc.rank == ncols:
            break

    kernel_dim = ncols - acc.rank
    return TorelliReport(
        dims=dims,
        psi_domain_dim=ncols,
        kernel_dim=kernel_dim,
        injective=kernel_dim == 0,
        vacuous=vacuous,
        s_value=J.S,
        q_range=q_range,
    )
