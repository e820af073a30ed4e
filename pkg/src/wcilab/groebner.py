"""Buchberger-based ideal arithmetic over exact rationals.

Provides reduced Groebner bases (sugar selection strategy, both of
Buchberger's pair criteria), normal forms, ideal membership, colon ideals and
intersections via the single-auxiliary-variable elimination construction,
saturation, Krull dimension of the affine quotient, regular-sequence tests
and graded Hilbert-function values.

All computations carry explicit resource budgets; exceeding a budget raises
:class:`ResourceLimitError` rather than returning a wrong answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .rings import (
    GradedRing,
    Monomial,
    Poly,
    grevlex_key,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
    weighted_degree,
)


class ResourceLimitError(RuntimeError):
    """A degree/step/size budget was exceeded; partial state is discarded."""


@dataclass(frozen=True)
class Budget:
    """Explicit resource limits for basis computations."""

    max_steps: int = 2_000_000
    max_basis: int = 600


DEFAULT_BUDGET = Budget()

# Deterministic work counters, reset per CLI invocation.  Single process,
# single task per ideal, so a module-level dict is safe here.
stats = {"reductions": 0}


def reset_stats():
    stats["reductions"] = 0


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """A total order on monomials, compatible with multiplication, 1 minimal.

    kinds:
      * ``grevlex`` -- weighted graded-reverse-lex with ``degree_weights``
      * ``lex``     -- plain lexicographic in the fixed variable order
      * ``block``   -- elimination order: monomials are compared first on the
        ``block1`` variables (weighted grevlex there), then on the rest.  Any
        monomial containing a block-1 variable exceeds every monomial in
        block-2 variables only.
    """

    kind: str
    ring: GradedRing
    block1: tuple[int, ...] = ()
    degree_weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        weights = self.degree_weights
        if weights is None:
            weights = self.ring.weights
            if any(w <= 0 for w in weights):
                weights = (1,) * self.ring.nvars
            object.__setattr__(self, "degree_weights", weights)
        if any(w <= 0 for w in self.degree_weights):
            raise ValueError("order degree weights must be positive")
        if self.kind == "block" and not self.block1:
            raise ValueError("block order needs a nonempty first block")

    def key(self, mono: Monomial):
        """Ascending sort key; max(terms, key=order.key) is the leading monomial."""
        if self.kind == "grevlex":
            return grevlex_key(mono, self.degree_weights)
        if self.kind == "lex":
            return mono
        block = set(self.block1)
        first = tuple(e for i, e in enumerate(mono) if i in block)
        second = tuple(e for i, e in enumerate(mono) if i not in block)
        w1 = tuple(w for i, w in enumerate(self.degree_weights) if i in block)
        w2 = tuple(w for i, w in enumerate(self.degree_weights) if i not in block)
        return grevlex_key(first, w1) + grevlex_key(second, w2)

    def weighted_deg(self, mono: Monomial) -> int:
        return sum(e * w for e, w in zip(mono, self.degree_weights))


def grevlex(ring: GradedRing) -> MonomialOrder:
    return MonomialOrder("grevlex", ring)


def lex_order(ring: GradedRing) -> MonomialOrder:
    return MonomialOrder("lex", ring)


def elimination_order(ring: GradedRing, split: int) -> MonomialOrder:
    """Eliminate the first ``split`` variables (they form block 1)."""
    return MonomialOrder("block", ring, block1=tuple(range(split)))


def block_order(ring: GradedRing, block1, degree_weights=None) -> MonomialOrder:
    return MonomialOrder("block", ring, block1=tuple(block1),
                         degree_weights=tuple(degree_weights) if degree_weights else None)


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class Ideal:
    """A finite generator list with optionally cached reduced Groebner bases.

    Generators are immutable; the basis cache is pure memoisation (one entry
    per monomial order).
    """

    ring: GradedRing
    generators: tuple[Poly, ...]
    _bases: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.generators = tuple(self.generators)
        for g in self.generators:
            if not isinstance(g, Poly) or g.ring != self.ring:
                raise ValueError("generator in a different ring")
            if g.is_zero():
                raise ValueError("zero generator")

    def basis(self, order: MonomialOrder | None = None, budget: Budget | None = None) -> tuple[Poly, ...]:
        """Reduced Groebner basis under ``order`` (computed once, then cached)."""
        order = order or grevlex(self.ring)
        if order not in self._bases:
            self._bases[order] = _reduced_groebner(self.generators, order, budget or DEFAULT_BUDGET)
        return self._bases[order]

    def cache_basis(self, order: MonomialOrder, basis_polys):
        self._bases[order] = tuple(basis_polys)

    def cached_orders(self):
        return tuple(self._bases)


def ideal(ring: GradedRing, gens) -> Ideal:
    return Ideal(ring, tuple(gens))


def buchberger(I: Ideal, order: MonomialOrder | None = None, budget: Budget | None = None) -> Ideal:
    """Compute and cache the reduced Groebner basis; returns the same ideal."""
    I.basis(order, budget)
    return I


# ---------------------------------------------------------------------------
# reduction machinery
# ---------------------------------------------------------------------------

def _leading(terms: dict, key) -> Monomial:
    return max(terms, key=key)


def _reduce_terms(terms: dict, reducers, order: MonomialOrder, budget: Budget,
                  sugar: int | None = None, reducer_sugars=None):
    """Full remainder of ``terms`` modulo monic ``reducers``.

    ``reducers`` is a list of (leading monomial, terms dict) with monic
    leading coefficient.  Returns (remainder dict, sugar) where sugar is the
    propagated sugar degree when tracking is requested.
    """
    key = order.key
    work = dict(terms)
    remainder: dict[Monomial, Fraction] = {}
    steps = 0
    while work:
        mono = _leading(work, key)
        coeff = work[mono]
        for idx, (lead, gterms) in enumerate(reducers):
            if mono_divides(lead, mono):
                quotient = mono_div(mono, lead)
                for gm, gc in gterms.items():
                    target = mono_mul(gm, quotient)
                    new = work.get(target, 0) - coeff * gc
                    if new:
                        work[target] = new
                    else:
                        work.pop(target, None)
                steps += 1
                stats["reductions"] += 1
                if steps > budget.max_steps:
                    raise ResourceLimitError(
                        f"reduction step budget exceeded ({budget.max_steps})")
                if sugar is not None:
                    sugar = max(sugar, reducer_sugars[idx] + order.weighted_deg(quotient))
                break
        else:
            remainder[mono] = coeff
            del work[mono]
    return remainder, sugar


def _monic(terms: dict, key) -> dict:
    lead = _leading(terms, key)
    lc = terms[lead]
    if lc == 1:
        return dict(terms)
    return {m: c / lc for m, c in terms.items()}


def _reduced_groebner(gens, order: MonomialOrder, budget: Budget) -> tuple[Poly, ...]:
    key = order.key
    ring = gens[0].ring if gens else None
    basis: list[dict] = []
    leads: list[Monomial] = []
    sugars: list[int] = []

    for g in gens:
        terms = _monic(g.terms, key)
        basis.append(terms)
        leads.append(_leading(terms, key))
        sugars.append(max(order.weighted_deg(m) for m in terms))

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def pair_rank(p):
        i, j = p
        lcm = mono_lcm(leads[i], leads[j])
        sugar = max(sugars[i] + order.weighted_deg(mono_div(lcm, leads[i])),
                    sugars[j] + order.weighted_deg(mono_div(lcm, leads[j])))
        return (sugar, key(lcm), i, j)

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.discard((i, j))
        lcm = mono_lcm(leads[i], leads[j])
        # first criterion: coprime leading monomials reduce to zero
        if lcm == mono_mul(leads[i], leads[j]):
            continue
        # chain criterion: a third element divides the lcm and both side
        # pairs were already treated
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not mono_divides(leads[k], lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik not in pairs and pjk not in pairs:
                skip = True
                break
        if skip:
            continue
        # S-polynomial (both sides are monic)
        spoly: dict[Monomial, Fraction] = {}
        qi = mono_div(lcm, leads[i])
        for m, c in basis[i].items():
            spoly[mono_mul(m, qi)] = c
        qj = mono_div(lcm, leads[j])
        for m, c in basis[j].items():
            target = mono_mul(m, qj)
            new = spoly.get(target, 0) - c
            if new:
                spoly[target] = new
            else:
                spoly.pop(target, None)
        sugar = max(sugars[i] + order.weighted_deg(qi), sugars[j] + order.weighted_deg(qj))
        remainder, sugar = _reduce_terms(spoly, list(zip(leads, basis)), order, budget,
                                         sugar, sugars)
        if not remainder:
            continue
        if len(basis) + 1 > budget.max_basis:
            raise ResourceLimitError(f"basis size budget exceeded ({budget.max_basis})")
        remainder = _monic(remainder, key)
        new_index = len(basis)
        basis.append(remainder)
        leads.append(_leading(remainder, key))
        sugars.append(sugar)
        pairs.update((k, new_index) for k in range(new_index))

    # minimalise: drop elements whose leading monomial is divisible by another
    order_indices = sorted(range(len(basis)), key=lambda k: key(leads[k]))
    minimal: list[int] = []
    for k in order_indices:
        if not any(mono_divides(leads[m], leads[k]) for m in minimal):
            minimal.append(k)

    # interreduce tails
    reduced: list[dict] = []
    for pos, k in enumerate(minimal):
        others = [(leads[m], basis[m]) for m in minimal if m != k]
        remainder, _ = _reduce_terms(basis[k], others, order, budget)
        if remainder:
            reduced.append(_monic(remainder, key))

    reduced.sort(key=lambda t: key(_leading(t, key)))
    return tuple(Poly(ring, t) for t in reduced)


# ---------------------------------------------------------------------------
# normal forms and membership
# ---------------------------------------------------------------------------

def normal_form(f: Poly, I: Ideal, order: MonomialOrder | None = None,
                budget: Budget | None = None) -> Poly:
    """Unique remainder of f modulo the reduced basis of I.

    Linear in f and idempotent, because the cached basis is reduced.
    """
    order = order or grevlex(I.ring)
    basis = I.basis(order, budget)
    reducers = [(_leading(g.terms, order.key), g.terms) for g in basis]
    remainder, _ = _reduce_terms(f.terms, reducers, order, budget or DEFAULT_BUDGET)
    return Poly(I.ring, remainder)


def ideal_membership(f: Poly, I: Ideal, order: MonomialOrder | None = None,
                     budget: Budget | None = None) -> bool:
    if f.is_zero():
        return True
    return normal_form(f, I, order, budget).is_zero()


def ideals_equal(I: Ideal, J: Ideal, budget: Budget | None = None) -> bool:
    """Two-sided generator membership; independent of basis representation."""
    return (all(ideal_membership(g, J, budget=budget) for g in I.generators)
            and all(ideal_membership(g, I, budget=budget) for g in J.generators))


def divide_exact(g: Poly, f: Poly, order: MonomialOrder | None = None) -> Poly:
    """Quotient g / f for exact division; raises if f does not divide g."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    order = order or grevlex(g.ring)
    key = order.key
    flead = _leading(f.terms, key)
    flc = f.terms[flead]
    work = dict(g.terms)
    quotient: dict[Monomial, Fraction] = {}
    while work:
        mono = _leading(work, key)
        if not mono_divides(flead, mono):
            raise ValueError("inexact polynomial division")
        q = mono_div(mono, flead)
        c = work[mono] / flc
        quotient[q] = c
        for fm, fc in f.terms.items():
            target = mono_mul(fm, q)
            new = work.get(target, 0) - c * fc
            if new:
                work[target] = new
            else:
                work.pop(target, None)
    return Poly(g.ring, quotient)


# ---------------------------------------------------------------------------
# elimination constructions: intersection, colon, saturation
# ---------------------------------------------------------------------------

def _aux_name(ring: GradedRing) -> str:
    name = "t"
    while name in ring.variables:
        name += "_"
    return name


def _lift(p: Poly, aux_ring: GradedRing) -> Poly:
    return Poly(aux_ring, {(0,) + m: c for m, c in p.terms.items()})


def intersect_ideals(I: Ideal, J: Ideal, budget: Budget | None = None) -> Ideal:
    """I ∩ J via the auxiliary-variable construction t·I + (1-t)·J."""
    ring = I.ring
    if J.ring != ring:
        raise ValueError("ideals live in different rings")
    if not I.generators or not J.generators:
        return Ideal(ring, ())
    positive = tuple(w if w > 0 else 1 for w in ring.weights)
    aux_ring = GradedRing((_aux_name(ring),) + ring.variables, (1,) + positive)
    t = Poly.variable(aux_ring, aux_ring.variables[0])
    one = Poly.constant(aux_ring, 1)
    gens = [t * _lift(g, aux_ring) for g in I.generators]
    gens += [(one - t) * _lift(g, aux_ring) for g in J.generators]
    order = elimination_order(aux_ring, 1)
    basis = Ideal(aux_ring, tuple(gens)).basis(order, budget)
    kept = []
    for g in basis:
        if all(m[0] == 0 for m in g.terms):
            kept.append(Poly(ring, {m[1:]: c for m, c in g.terms.items()}))
    result = Ideal(ring, tuple(kept))
    # the t-free part of the reduced elimination basis is itself a reduced
    # basis for the induced grevlex order on the original variables
    if all(w > 0 for w in ring.weights):
        result.cache_basis(grevlex(ring), kept)
    return result


def colon_ideal(I: Ideal, f: Poly, budget: Budget | None = None) -> Ideal:
    """(I : f) = {g : g·f ∈ I}, computed via I ∩ (f) and exact division."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    ring = I.ring
    meet = intersect_ideals(I, Ideal(ring, (f,)), budget)
    gens = tuple(divide_exact(g, f) for g in meet.generators)
    result = Ideal(ring, gens)
    result.basis(budget=budget)
    return result


def saturate_wrt(I: Ideal, J: Ideal, budget: Budget | None = None) -> tuple[Ideal, int]:
    """(I : J^∞) by iterating the colon with J until the ideal stabilises.

    Each round replaces the current ideal by its colon with the whole ideal J
    (the intersection of the colons with each generator); the returned step
    count includes the final round that certifies stability.
    """
    if not J.generators:
        raise ValueError("saturation with respect to the zero ideal")
    current = I
    steps = 0
    while True:
        pieces = [colon_ideal(current, g, budget) for g in J.generators]
        nxt = pieces[0]
        for piece in pieces[1:]:
            nxt = intersect_ideals(nxt, piece, budget)
        steps += 1
        if ideals_equal(nxt, current, budget):
            current.basis(budget=budget)
            return current, steps
        current = nxt


# ---------------------------------------------------------------------------
# dimension, regular sequences, Hilbert values
# ---------------------------------------------------------------------------

def krull_dim(I: Ideal, order: MonomialOrder | None = None,
              budget: Budget | None = None) -> int:
    """Krull dimension of the affine quotient ring, -1 for the unit ideal.

    Computed as the largest cardinality of a variable subset S such that no
    leading monomial of the reduced basis has support inside S (exhaustive
    subset search; exact for any monomial order since the Groebner
    degeneration is flat).
    """
    basis = I.basis(order, budget)
    n = I.ring.nvars
    supports = [frozenset(i for i, e in enumerate(lm) if e)
                for lm in (_leading(g.terms, (order or grevlex(I.ring)).key) for g in basis)]
    if any(not s for s in supports):
        return -1  # a unit leading monomial: the whole ring
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return -1


def is_regular_sequence(fs, ring: GradedRing, budget: Budget | None = None) -> bool:
    """True iff the weighted-homogeneous sequence cuts down the dimension by
    exactly its length (the ambient ring is Cohen-Macaulay, so height equals
    the sequence length iff the sequence is regular)."""
    fs = tuple(fs)
    for f in fs:
        if f.is_zero():
            raise ValueError("zero element in candidate regular sequence")
        if weighted_degree(f) is None:
            raise ValueError("inhomogeneous element in candidate regular sequence")
    if not fs:
        return True
    I = Ideal(ring, fs)
    return krull_dim(I, budget=budget) == ring.nvars - len(fs)


def hilbert_component_dim(I: Ideal, degree: int, budget: Budget | None = None) -> int:
    """dim_Q (R/I)_degree: standard monomials of the given weighted degree."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    ring = I.ring
    order = grevlex(ring)
    basis = I.basis(order, budget)
    leads = [_leading(g.terms, order.key) for g in basis]
    count = 0
    for mono in monomials_of_degree(ring.weights, degree):
        if not any(mono_divides(lm, mono) for lm in leads):
            count += 1
    return count
