"""Finite groups acting by linear substitutions, and their invariants.

Provides the averaging (Reynolds) projection when the group order is
invertible, graded bases of invariants in any characteristic via the
fixed-point linear system, and the elementary-symmetric-function generators
that exhibit any element as integral over the invariant ring.
"""

from __future__ import annotations

from .linalg import nullspace
from .poly import GREVLEX, PolyRing, Polynomial
from .ring import AmbientRing, RingMap


class GroupAction:
    """A finite group of affine-linear substitutions on a free polynomial
    ring, given as an explicit list of maps (the identity included)."""

    def __init__(self, ring: AmbientRing, maps: list[RingMap]):
        if ring.is_product or ring.q_gens(0):
            raise ValueError("group actions are supported on free polynomial rings only")
        if not maps:
            raise ValueError("a group action needs at least the identity map")
        for m in maps:
            if m.source != ring or m.target != ring:
                raise ValueError("every map must be an endomorphism of the ring")
            for im in m.assignments[0][1]:
                if im.total_degree() > 1:
                    raise ValueError(
                        f"non-linear substitution {ring.poly_ring(0).render(im)!r}"
                    )
        self.ring = ring
        self.maps = list(maps)
        self._validated = False

    @property
    def order(self) -> int:
        return len(self.maps)

    def _find(self, m: RingMap) -> int | None:
        for i, g in enumerate(self.maps):
            if g == m:
                return i
        return None

    def validate(self) -> None:
        """Check the group axioms: distinct elements, identity present,
        closure under composition, inverses present."""
        if self._validated:
            return
        for i, g in enumerate(self.maps):
            if self._find(g) != i:
                raise ValueError("duplicate group element in action")
        ident = RingMap.identity(self.ring)
        if self._find(ident) is None:
            raise ValueError("action does not contain the identity")
        for g in self.maps:
            has_inverse = False
            for h in self.maps:
                gh = g.compose(h)
                if self._find(gh) is None:
                    raise ValueError("action is not closed under composition")
                if gh == ident:
                    has_inverse = True
            if not has_inverse:
                raise ValueError("a group element has no inverse in the list")
        self._validated = True

    def apply(self, i: int, f: Polynomial) -> Polynomial:
        return self.maps[i].apply_poly(f)


def reynolds_project(f: Polynomial, action: GroupAction) -> Polynomial:
    """Average of the orbit of ``f``: the projection onto invariants.

    Needs the group order to be invertible in the field.
    """
    action.validate()
    field = action.ring.field
    n = action.order
    if field.characteristic and n % field.characteristic == 0:
        raise ValueError(
            f"group order {n} is not invertible in characteristic {field.characteristic}"
        )
    total = action.ring.poly_ring(0).zero
    for g in action.maps:
        total = total + g.apply_poly(f)
    return total.scale(field.inv(field.of_int(n)))


def invariant_basis(action: GroupAction, d: int) -> list[list[Polynomial]]:
    """Canonical basis of the degree-``e`` invariants for every ``e <= d``.

    Solves the fixed-point system ``g(f) = f`` for all group elements, so it
    works in every characteristic (no averaging involved).
    """
    action.validate()
    pr = action.ring.poly_ring(0)
    field = pr.field
    out: list[list[Polynomial]] = [[pr.one]]
    nontrivial = [g for g in action.maps if g != RingMap.identity(action.ring)]
    for e in range(1, d + 1):
        columns = pr.monomials_of_degree(e)
        rows = []
        for g in nontrivial:
            moved = {m: g.apply_poly(pr.monomial(m)) for m in columns}
            condition: dict = {}
            targets = set()
            for m in columns:
                for mm in moved[m].terms:
                    targets.add(mm)
            for mm in sorted(targets, key=pr.order.key, reverse=True):
                row = {}
                for m in columns:
                    c = moved[m].terms.get(mm, field.zero)
                    if mm == m:
                        c = field.sub(c, field.one)
                    if not field.is_zero(c):
                        row[m] = c
                if row:
                    rows.append(row)
        basis = []
        for v in nullspace(rows, columns, field):
            basis.append(Polynomial(pr, dict(v)))
        out.append(basis)
    return out


def orbit_symmetric_generators(
    r: Polynomial, action: GroupAction
) -> tuple[list[Polynomial], Polynomial]:
    """Elementary symmetric functions of the orbit of ``r`` and the monic
    equation they furnish.

    Returns ``(sigmas, equation)`` where ``equation`` is the expansion of
    ``prod_g (T - g(r))`` in a ring with one extra leading variable ``T``:
    a monic degree-``|G|`` polynomial in ``T`` with invariant coefficients
    ``(-1)^j sigma_j`` that vanishes at ``T = r`` (checked by substitution).
    """
    action.validate()
    pr = action.ring.poly_ring(0)
    t_name = "T"
    while t_name in pr.names:
        t_name = "_" + t_name
    W = PolyRing(pr.field, (t_name,) + tuple(pr.names), GREVLEX)
    T = W.var(0)
    product = W.one
    orbit = [g.apply_poly(r) for g in action.maps]
    for val in orbit:
        product = product * (T - W.convert(val))
    n = action.order
    # split by powers of T: coefficient of T^(n-j) is (-1)^j sigma_j
    by_power: dict[int, dict] = {}
    for m, c in product.terms.items():
        by_power.setdefault(m[0], {})[m[1:]] = c
    sigmas = []
    minus_one = pr.field.neg(pr.field.one)
    for j in range(1, n + 1):
        coeffs = by_power.get(n - j, {})
        sign = pr.field.one if j % 2 == 0 else minus_one
        sigmas.append(
            Polynomial(pr, {m: pr.field.mul(c, sign) for m, c in coeffs.items()})
        )
    check = product.substitute(pr, [r] + list(pr.gens()))
    if not check.is_zero():
        raise RuntimeError("internal error: orbit equation fails at T = r")
    return sigmas, product
