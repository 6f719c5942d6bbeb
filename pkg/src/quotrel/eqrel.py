"""Finite equivalence relations on an affine scheme, presented by ideals.

A relation on ``X = Spec A[x]/Q`` is an ideal ``I`` in a doubled polynomial
ring: one block of variables for each of the two projections.  The module
builds such presentations (from explicit generators, from a list of
polynomials defining a finite map, or from a finite group action) and checks
the four equivalence-relation axioms — reflexivity, symmetry, transitivity,
finiteness — in either of two modes:

* ``scheme``: ideal-theoretic containments (the strict reading);
* ``set``: the same containments up to radicals, which only sees the
  underlying point sets.

Transitivity in set mode uses radical membership of each generator; this is
equivalent to factoring through the reduction of the composed correspondence
and is taken as given here rather than re-proved.

Finiteness asks whether the relation's coordinate ring is a finite module
over the first projection; this is a property of the scheme structure, so it
is checked identically in both modes.
"""

from __future__ import annotations

import string

from .groebner import (
    finite_over_block,
    groebner_basis,
    ideal_intersect,
    ideal_member,
    normal_form,
    radical_member,
)
from .poly import BlockOrder, GREVLEX, PolyRing, Polynomial
from .ring import AmbientRing


def copy_names(names, copies: int) -> list[list[str]]:
    """Names for ``copies`` disjoint copies of a variable list.

    Plain names get a copy index appended (``x, y`` doubles to
    ``x1, y1, x2, y2``).  If every name is already a single letter plus an
    index (``x1, x2``), the letter is rotated instead — the first copy keeps
    the original names and later copies become ``y1, y2``, ``z1, z2``, … —
    so indices keep meaning "coordinate number".  Anything else falls back to
    ``name_c1, name_c2``, … suffixes.
    """
    names = list(names)
    if all(not n[-1].isdigit() for n in names):
        return [[f"{n}{i + 1}" for n in names] for i in range(copies)]
    letters = {n[0] for n in names}
    if len(letters) == 1 and all(
        len(n) >= 2 and n[0] in string.ascii_letters and n[1:].isdigit() for n in names
    ):
        base = names[0][0]
        pool = [c for c in "xyzuvwabcdefghijklmnopqrst" if c != base]
        out = [names]
        for i in range(copies - 1):
            out.append([pool[i] + n[1:] for n in names])
        return out
    return [[f"{n}_c{i + 1}" for n in names] for i in range(copies)]


def copied_ring(ambient: AmbientRing, copies: int, order=None) -> PolyRing:
    """Polynomial ring on ``copies`` blocks of the ambient variables."""
    pr = ambient.poly_ring(0)
    blocks = copy_names(pr.names, copies)
    flat = [n for block in blocks for n in block]
    return PolyRing(pr.field, flat, order or GREVLEX)


def to_copy(f: Polynomial, target: PolyRing, copy: int, nvars: int) -> Polynomial:
    """Rewrite an ambient polynomial in the ``copy``-th variable block."""
    off = copy * nvars
    terms = {}
    for m, c in f.terms.items():
        e = [0] * target.nvars
        for i, x in enumerate(m):
            e[off + i] = x
        terms[tuple(e)] = c
    return Polynomial(target, terms)


def move_copies(f: Polynomial, target: PolyRing, placement: list[int], nvars: int) -> Polynomial:
    """Send block ``b`` of a copied-ring polynomial to block ``placement[b]``
    of another copied ring (used to form I(x,z) inside the tripled ring)."""
    terms = {}
    for m, c in f.terms.items():
        e = [0] * target.nvars
        for b, dest in enumerate(placement):
            for i in range(nvars):
                e[dest * nvars + i] = m[b * nvars + i]
        terms[tuple(e)] = c
    return Polynomial(target, terms)


class RelationPresentation:
    """An equivalence-relation candidate: an ideal in the doubled ring.

    ``gens`` is the user-supplied generator list, kept verbatim (witness
    reporting refers to it); the presented ideal always also contains both
    copies of the ambient defining ideal, collected in ``full_gens``.  When
    the relation came from a polynomial map, ``map_polys`` remembers the
    defining polynomials for later descent-data checks.
    """

    def __init__(
        self,
        ambient: AmbientRing,
        gens: list[Polynomial],
        map_polys: list[Polynomial] | None = None,
        source: str = "explicit",
    ):
        if ambient.is_product:
            raise ValueError(
                "relation presentations require a connected ambient scheme; "
                "encode disjoint unions as a pair of maps instead"
            )
        self.ambient = ambient
        pr = ambient.poly_ring(0)
        self.nvars = pr.nvars
        self.copies = copy_names(pr.names, 3)
        self.doubled = PolyRing(pr.field, self.copies[0] + self.copies[1], GREVLEX)
        self.gens = [g if g.ring == self.doubled else self.doubled.convert(g) for g in gens]
        self.full_gens = list(self.gens)
        for copy in (0, 1):
            for q in ambient.q_gens(0):
                self.full_gens.append(to_copy(q, self.doubled, copy, self.nvars))
        self.map_polys = map_polys
        self.source = source
        self.budget = ambient.budget
        self._gb: list[Polynomial] | None = None

    def gb(self) -> list[Polynomial]:
        if self._gb is None:
            self._gb = groebner_basis(self.full_gens, self.budget)
        return self._gb

    def swap(self, f: Polynomial) -> Polynomial:
        """Exchange the two variable blocks."""
        return move_copies(f, self.doubled, [1, 0], self.nvars)

    def contains_diagonal_ideal(self) -> bool:
        """Sanity check: both copies of the defining ideal lie in I."""
        gb = self.gb()
        return all(
            normal_form(g, gb).is_zero() for g in self.full_gens[len(self.gens):]
        )

    def render(self) -> str:
        return "(" + ", ".join(self.doubled.render(g) for g in self.gens) + ")"


def relation_from_map(ambient: AmbientRing, fs: list[Polynomial]) -> RelationPresentation:
    """The relation identifying points with equal values under ``fs``:
    generated by ``f(x-block) - f(y-block)`` for each given polynomial.

    An empty list yields the indiscrete relation (0).
    """
    pr = ambient.poly_ring(0)
    rel = RelationPresentation(ambient, [], map_polys=list(fs), source="map")
    n = rel.nvars
    gens = []
    for f in fs:
        g = f if f.ring == pr else pr.convert(f)
        gens.append(to_copy(g, rel.doubled, 0, n) - to_copy(g, rel.doubled, 1, n))
    rel.gens = gens
    rel.full_gens = gens + rel.full_gens
    rel._gb = None
    return rel


def relation_from_group_action(action) -> RelationPresentation:
    """The relation "same orbit": the intersection over all group elements of
    the graph ideals ``(y-block - g(x-block)) + Q``."""
    from .invariants import GroupAction

    if not isinstance(action, GroupAction):
        raise TypeError("expected a GroupAction")
    action.validate()
    ambient = action.ring
    rel = RelationPresentation(ambient, [], source="action")
    pr = ambient.poly_ring(0)
    n = rel.nvars
    D = rel.doubled
    q_copies = [to_copy(q, D, c, n) for c in (0, 1) for q in ambient.q_gens(0)]
    graphs = []
    for g in action.maps:
        gens = [
            to_copy(pr.var(i), D, 1, n) - to_copy(g.assignments[0][1][i], D, 0, n)
            for i in range(n)
        ]
        graphs.append(gens + q_copies)
    current = graphs[0]
    for nxt in graphs[1:]:
        current = ideal_intersect(current, nxt, ambient.budget)
    rel.gens = groebner_basis(current, ambient.budget)
    rel.full_gens = rel.gens + q_copies
    rel._gb = None
    return rel


class AxiomReport:
    """Outcome of the four equivalence-relation axioms, with witnesses.

    Each witness is a polynomial that fails the defining membership of its
    axiom (for finiteness: a first-block variable with no monic equation over
    the second block).
    """

    AXES = ("reflexivity", "symmetry", "transitivity", "finiteness")

    def __init__(self, mode: str):
        self.mode = mode
        self.verdicts: dict[str, bool] = {}
        self.witnesses: dict[str, Polynomial | None] = {a: None for a in self.AXES}

    @property
    def all_pass(self) -> bool:
        return all(self.verdicts.values())

    def render(self) -> str:
        lines = [f"equivalence-relation check (mode={self.mode})"]
        width = max(len(a) for a in self.AXES) + 1
        for a in self.AXES:
            ok = self.verdicts[a]
            line = f"  {a + ':':<{width}} {'pass' if ok else 'FAIL'}"
            w = self.witnesses[a]
            if w is not None:
                line += f"   witness: {w.ring.render(w)}"
            lines.append(line)
        return "\n".join(lines)


def verify_relation(rel: RelationPresentation, mode: str = "scheme") -> AxiomReport:
    """Check reflexivity, symmetry, transitivity and finiteness.

    In scheme mode every containment is ideal membership; in set mode the
    memberships are relaxed to radical membership (finiteness is structural
    and checked the same way in both modes).  The reported witness is the
    first failing generator in the presentation's own order, untouched.
    """
    if mode not in ("scheme", "set"):
        raise ValueError("mode must be 'scheme' or 'set'")
    report = AxiomReport(mode)
    D = rel.doubled
    n = rel.nvars
    budget = rel.budget

    def member(f, gens, gb):
        if mode == "scheme":
            return ideal_member(f, gb)
        return radical_member(f, gens, budget)

    # reflexivity: I vanishes on the diagonal
    diag = [
        to_copy(rel.ambient.poly_ring(0).var(i), D, 0, n)
        - to_copy(rel.ambient.poly_ring(0).var(i), D, 1, n)
        for i in range(n)
    ]
    diag_gens = diag + rel.full_gens[len(rel.gens):]
    diag_gb = groebner_basis(diag_gens, budget)
    ok, witness = True, None
    for g in rel.gens:
        if not member(g, diag_gens, diag_gb):
            ok, witness = False, g
            break
    report.verdicts["reflexivity"] = ok
    report.witnesses["reflexivity"] = witness

    # symmetry: the block swap preserves I.  Since swapping is an involution,
    # one containment forces equality.
    I_gb = rel.gb()
    ok, witness = True, None
    for g in rel.gens:
        sw = rel.swap(g)
        if not member(sw, rel.full_gens, I_gb):
            ok, witness = False, sw
            break
    report.verdicts["symmetry"] = ok
    report.witnesses["symmetry"] = witness

    # transitivity: I(1,3) inside I(1,2) + I(2,3) in the tripled ring
    T = PolyRing(D.field, rel.copies[0] + rel.copies[1] + rel.copies[2], GREVLEX)
    I12 = [move_copies(g, T, [0, 1], n) for g in rel.full_gens]
    I23 = [move_copies(g, T, [1, 2], n) for g in rel.full_gens]
    sum_gens = I12 + I23
    sum_gb = groebner_basis(sum_gens, budget)
    ok, witness = True, None
    for g in rel.full_gens:
        g13 = move_copies(g, T, [0, 2], n)
        if not member(g13, sum_gens, sum_gb):
            ok, witness = False, g13
            break
    report.verdicts["transitivity"] = ok
    report.witnesses["transitivity"] = witness

    # finiteness: O(R) is a finite module over the first block, read off a
    # block-order basis with the second block in front
    W = PolyRing(D.field, rel.copies[1] + rel.copies[0], BlockOrder(n))
    gb_w = groebner_basis([W.convert(g) for g in rel.full_gens], budget)
    finite, missing = finite_over_block(n, gb_w)
    report.verdicts["finiteness"] = finite
    report.witnesses["finiteness"] = None if finite else W.var(missing[0])
    return report
