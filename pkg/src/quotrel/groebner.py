"""Buchberger's algorithm and the ideal-theoretic toolkit built on it.

Everything downstream (membership sieves, elimination, intersections, kernel
computations) funnels through :func:`groebner_basis`, which returns the unique
reduced basis for the ring's monomial order, sorted by increasing leading
monomial.  All routines are deterministic: same input, same output, bit for
bit.

Computations carry a *budget* — a cap on the number of S-pair reductions and
on the basis size.  Exceeding it raises :class:`BudgetExceededError`, which is
a resource failure, not a mathematical answer; callers must not treat it as
"no".
"""

from __future__ import annotations

from .poly import (
    BlockOrder,
    GREVLEX,
    Monomial,
    PolyRing,
    Polynomial,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

DEFAULT_BUDGET = 100_000


class BudgetExceededError(RuntimeError):
    """A computation ran out of its resource budget before finishing."""


# ---------------------------------------------------------------------------
# division / normal forms
# ---------------------------------------------------------------------------


def normal_form(f: Polynomial, basis: list[Polynomial]) -> Polynomial:
    """Remainder of ``f`` on division by ``basis`` (first divisor wins).

    Against a Groebner basis this is the canonical normal form; against an
    arbitrary list it is still deterministic but order-dependent.
    """
    ring = f.ring
    field = ring.field
    key = ring.order.key
    divisors = [
        (g.leading_monomial(), g.leading_coeff(), g) for g in basis if not g.is_zero()
    ]
    p = f
    remainder: dict[Monomial, object] = {}
    while p.terms:
        lm = max(p.terms, key=key)
        lc = p.terms[lm]
        for gm, gc, g in divisors:
            if monomial_divides(gm, lm):
                factor = field.div(lc, gc)
                p = p - g.mul_monomial(monomial_div(lm, gm), factor)
                break
        else:
            remainder[lm] = lc
            p = Polynomial(ring, {m: c for m, c in p.terms.items() if m != lm})
    return Polynomial(ring, remainder)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    field = f.ring.field
    fm, gm = f.leading_monomial(), g.leading_monomial()
    lcm = monomial_lcm(fm, gm)
    a = f.mul_monomial(monomial_div(lcm, fm), field.inv(f.leading_coeff()))
    b = g.mul_monomial(monomial_div(lcm, gm), field.inv(g.leading_coeff()))
    return a - b


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------


def _buchberger(gens: list[Polynomial], ring: PolyRing, budget: int) -> list[Polynomial]:
    key = ring.order.key
    G = sorted(
        (g.monic() for g in gens if not g.is_zero()),
        key=lambda g: key(g.leading_monomial()),
    )
    if not G:
        return []
    lms = [g.leading_monomial() for g in G]
    pairs: set[tuple[int, int]] = {(i, j) for j in range(len(G)) for i in range(j)}
    processed = 0

    def lcm_of(pair):
        return monomial_lcm(lms[pair[0]], lms[pair[1]])

    while pairs:
        # normal selection: smallest lcm first (ties broken by index for determinism)
        pair = min(pairs, key=lambda p: (key(lcm_of(p)), p))
        pairs.discard(pair)
        i, j = pair
        lcm = lcm_of(pair)
        # product criterion: coprime leading monomials reduce to zero
        if lcm == monomial_mul(lms[i], lms[j]):
            continue
        # chain criterion: some k with lm_k | lcm and both other pairs handled
        skip = False
        for k in range(len(G)):
            if k in pair or not monomial_divides(lms[k], lcm):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                skip = True
                break
        if skip:
            continue
        processed += 1
        if processed > budget:
            raise BudgetExceededError(
                f"Groebner computation exceeded budget: {processed} S-pair reductions"
            )
        r = normal_form(s_polynomial(G[i], G[j]), G)
        if r.is_zero():
            continue
        G.append(r.monic())
        lms.append(r.leading_monomial())
        if len(G) > budget:
            raise BudgetExceededError(
                f"Groebner computation exceeded budget: basis grew past {budget}"
            )
        new = len(G) - 1
        pairs.update((k, new) for k in range(new))
    return G


def _reduce_basis(G: list[Polynomial], ring: PolyRing) -> list[Polynomial]:
    key = ring.order.key
    # minimalize: drop elements whose leading monomial another one divides
    minimal: list[Polynomial] = []
    lms = [g.leading_monomial() for g in G]
    for i, g in enumerate(G):
        if any(
            j != i
            and monomial_divides(lms[j], lms[i])
            and (lms[j] != lms[i] or j < i)
            for j in range(len(G))
        ):
            continue
        minimal.append(g)
    # inter-reduce tails
    reduced: list[Polynomial] = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = normal_form(g, others)
        if not r.is_zero():
            reduced.append(r.monic())
    reduced.sort(key=lambda g: key(g.leading_monomial()))
    return reduced


def groebner_basis(
    gens: list[Polynomial], budget: int | None = None
) -> list[Polynomial]:
    """The reduced Groebner basis of the ideal generated by ``gens``.

    The result is canonical for the ring's monomial order and is sorted by
    increasing leading monomial.  Returns ``[]`` for the zero ideal.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    G = _buchberger(gens, ring, DEFAULT_BUDGET if budget is None else budget)
    return _reduce_basis(G, ring)


def is_unit_ideal(gb: list[Polynomial]) -> bool:
    return len(gb) == 1 and gb[0].total_degree() == 0


def ideal_member(f: Polynomial, gb: list[Polynomial]) -> bool:
    return normal_form(f, gb).is_zero()


def ideal_equal(
    gens_a: list[Polynomial], gens_b: list[Polynomial], budget: int | None = None
) -> bool:
    """Whether two generating sets span the same ideal (compares reduced bases)."""
    return groebner_basis(gens_a, budget) == groebner_basis(gens_b, budget)


# ---------------------------------------------------------------------------
# elimination and derived operations
# ---------------------------------------------------------------------------


def _fresh_name(base: str, taken: tuple[str, ...]) -> str:
    name = base
    while name in taken:
        name = "_" + name
    return name


def eliminate(
    gens: list[Polynomial],
    drop: list[int],
    budget: int | None = None,
) -> list[Polynomial]:
    """Generators of the elimination ideal: intersect with the subring
    omitting the variables at indices ``drop``.

    Returns a reduced Groebner basis in the smaller ring (grevlex).
    """
    if not gens:
        return []
    ring = gens[0].ring
    drop_set = set(drop)
    front = [i for i in range(ring.nvars) if i in drop_set]
    back = [i for i in range(ring.nvars) if i not in drop_set]
    perm_names = [ring.names[i] for i in front + back]
    work = PolyRing(ring.field, perm_names, BlockOrder(len(front)))
    gb = groebner_basis([work.convert(g) for g in gens], budget)
    keep_ring = PolyRing(ring.field, [ring.names[i] for i in back], GREVLEX)
    kept = [
        keep_ring.convert(g)
        for g in gb
        if all(m[: len(front)] == (0,) * len(front) for m in g.terms)
    ]
    return groebner_basis(kept, budget)


def ideal_intersect(
    gens_i: list[Polynomial],
    gens_j: list[Polynomial],
    budget: int | None = None,
) -> list[Polynomial]:
    """Reduced basis of the intersection of two ideals in the same ring."""
    if not gens_i or not gens_j:
        return []
    ring = gens_i[0].ring
    t_name = _fresh_name("t", ring.names)
    work = PolyRing(ring.field, (t_name,) + ring.names, BlockOrder(1))
    t = work.var(0)
    lifted = [t * work.convert(g) for g in gens_i]
    lifted += [(work.one - t) * work.convert(g) for g in gens_j]
    gb = groebner_basis(lifted, budget)
    kept = [ring.convert(g) for g in gb if all(m[0] == 0 for m in g.terms)]
    return groebner_basis(kept, budget)


def radical_member(
    f: Polynomial, gens: list[Polynomial], budget: int | None = None
) -> bool:
    """Whether some power of ``f`` lies in the ideal (Rabinowitsch trick)."""
    if f.is_zero():
        return True
    ring = f.ring
    t_name = _fresh_name("t", ring.names)
    work = PolyRing(ring.field, (t_name,) + ring.names, GREVLEX)
    t = work.var(0)
    lifted = [work.convert(g) for g in gens]
    lifted.append(work.one - t * work.convert(f))
    return is_unit_ideal(groebner_basis(lifted, budget))


def finite_over_block(
    front: int, gb: list[Polynomial]
) -> tuple[bool, list[int]]:
    """Test module-finiteness from a block-order basis.

    ``gb`` must be a Groebner basis for a :class:`BlockOrder` with the given
    number of front variables.  The quotient is a finite module over the back
    variables iff every front variable has some pure power as a leading
    monomial.  Returns the verdict plus the indices of front variables that
    fail.
    """
    missing = []
    for i in range(front):
        found = False
        for g in gb:
            lm = g.leading_monomial()
            if lm[i] > 0 and all(e == 0 for k, e in enumerate(lm) if k != i):
                found = True
                break
        if not found:
            missing.append(i)
    return (not missing, missing)


class MembershipSieve:
    """Repeated subalgebra-membership tests against one fixed generator list.

    Adjoin a tag variable ``wj`` for each generator and compute, once, a
    Groebner basis of ``(relations) + (wj - gens[j])`` in a block order that
    makes every original variable larger than every tag.  A tag-only
    polynomial can only reduce to tag-only polynomials under such an order,
    so a query ``f`` lies in the subalgebra iff its normal form involves no
    original variable.
    """

    def __init__(
        self,
        ring: PolyRing,
        gens: list[Polynomial],
        extra_relations=(),
        budget: int | None = None,
    ):
        self.ring = ring
        self.gens = list(gens)
        n = ring.nvars
        taken = set(ring.names)
        w_names = []
        for j in range(len(gens)):
            name = _fresh_name(f"w{j + 1}", tuple(taken))
            taken.add(name)
            w_names.append(name)
        self.w_names = tuple(w_names)
        self.work = PolyRing(ring.field, tuple(ring.names) + self.w_names, BlockOrder(n))
        T = [self.work.convert(g) for g in extra_relations if not g.is_zero()]
        for j, g in enumerate(gens):
            T.append(self.work.var(n + j) - self.work.convert(g))
        self.gb = groebner_basis(T, budget)
        self._zeros = (0,) * n

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of ``f`` in the tagged ring."""
        return normal_form(self.work.convert(f), self.gb)

    def tag_only(self, nf: Polynomial) -> bool:
        z = self._zeros
        n = self.ring.nvars
        return all(m[:n] == z for m in nf.terms)

    def query(self, f: Polynomial) -> tuple[bool, Polynomial | None]:
        """Membership verdict plus certificate in a fresh ``k[w1..wn]`` ring.

        Substituting the generators into the certificate reproduces ``f``
        modulo the relations.
        """
        nf = self.reduce(f)
        if not self.tag_only(nf):
            return False, None
        cert_ring = PolyRing(self.ring.field, self.w_names, GREVLEX)
        cert = cert_ring.convert(nf) if self.w_names else None
        if cert is None:
            cert = PolyRing(self.ring.field, ("w1",), GREVLEX).constant(nf.constant_coeff())
        return True, cert


def subalgebra_member(
    f: Polynomial,
    gens: list[Polynomial],
    extra_relations=(),
    budget: int | None = None,
) -> tuple[bool, Polynomial | None]:
    """Exact membership of ``f`` in the subalgebra generated by ``gens``,
    optionally modulo the ideal spanned by ``extra_relations``.

    One-shot wrapper around :class:`MembershipSieve`.
    """
    sieve = MembershipSieve(f.ring, gens, extra_relations, budget)
    return sieve.query(f)
