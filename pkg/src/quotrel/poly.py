"""Sparse multivariate polynomials with exact coefficients.

A polynomial is stored as a dict mapping exponent tuples to nonzero field
elements.  Rings carry a monomial order (lex, grevlex, or a block order built
from grevlex pieces); the order only affects leading terms, sorting and
rendering, never the arithmetic.

The text format accepted by :meth:`PolyRing.parse` and produced by
:meth:`PolyRing.render` is the usual one::

    2/3*x^3 + 1/2*x^2 - y*z + 4

Multiplication is written explicitly with ``*`` and powers with ``^``.
Rendering sorts terms in decreasing monomial order, so ``parse(render(f))``
returns ``f`` on the nose.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Iterator

from .fields import Field, QQ

Monomial = tuple[int, ...]


class ParseError(ValueError):
    """Raised when a polynomial or script fails to parse."""


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------


class MonomialOrder:
    """A monomial order, exposed as a sort key (bigger key = bigger monomial)."""

    name: str

    def key(self, m: Monomial):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class LexOrder(MonomialOrder):
    name = "lex"

    def key(self, m: Monomial):
        return m


class GrevlexOrder(MonomialOrder):
    """Graded reverse lexicographic order.

    Monomials are compared first by total degree; ties are broken by the
    *smallest* exponent on the *last* variable winning, which the key encodes
    by negating the reversed exponent vector.
    """

    name = "grevlex"

    def key(self, m: Monomial):
        return (sum(m), tuple(-e for e in reversed(m)))


class BlockOrder(MonomialOrder):
    """Elimination order: the first ``front`` variables dominate the rest.

    Within each block the comparison is grevlex, so any monomial containing a
    front variable beats every monomial in the back variables alone.  Used to
    eliminate variables from ideals.
    """

    def __init__(self, front: int):
        self.front = front
        self.name = f"block({front})"

    def key(self, m: Monomial):
        f, b = m[: self.front], m[self.front :]
        return (
            sum(f),
            tuple(-e for e in reversed(f)),
            sum(b),
            tuple(-e for e in reversed(b)),
        )


LEX = LexOrder()
GREVLEX = GrevlexOrder()


def order_from_name(name: str) -> MonomialOrder:
    if name == "lex":
        return LEX
    if name == "grevlex":
        return GREVLEX
    m = re.fullmatch(r"block\((\d+)\)", name)
    if m:
        return BlockOrder(int(m.group(1)))
    raise ValueError(f"unknown monomial order {name!r}")


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True if the monomial with exponents ``a`` divides the one with ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """Exponent vector of a/b (caller must know b divides a)."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# rings and polynomials
# ---------------------------------------------------------------------------


class PolyRing:
    """A polynomial ring ``field[names]`` with a monomial order."""

    def __init__(self, field: Field, names: Iterable[str], order: MonomialOrder = GREVLEX):
        self.field = field
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        self.order = order
        self.nvars = len(self.names)
        self._index = {n: i for i, n in enumerate(self.names)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}; {self.order!r}]"

    # -- constructors -------------------------------------------------------

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field.one})

    def constant(self, c) -> "Polynomial":
        if self.field.is_zero(c):
            return self.zero
        return Polynomial(self, {(0,) * self.nvars: c})

    def from_int(self, n: int) -> "Polynomial":
        return self.constant(self.field.of_int(n))

    def var(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, expts: Monomial, coeff=None) -> "Polynomial":
        c = self.field.one if coeff is None else coeff
        if self.field.is_zero(c):
            return self.zero
        return Polynomial(self, {tuple(expts): c})

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.field, self.names, order)

    def convert(self, f: "Polynomial") -> "Polynomial":
        """Rebuild ``f`` in this ring.

        Variables are matched by name; the coefficient field may change
        (rationals reduce mod p when the denominator stays invertible).
        """
        src = f.ring
        if src.names == self.names:
            reindex = None
        else:
            # Only variables that actually occur need to exist in the target.
            reindex = [self._index.get(n) for n in src.names]
        terms: dict[Monomial, object] = {}
        for m, c in f.terms.items():
            if src.field == self.field:
                c2 = c
            else:
                frac = c if src.field.characteristic == 0 else None
                if frac is None:
                    c2 = self.field.of_int(int(c))
                else:
                    if frac.denominator % getattr(self.field, "p", 1) == 0 and self.field.characteristic:
                        raise ZeroDivisionError(
                            f"denominator {frac.denominator} not invertible in {self.field!r}"
                        )
                    c2 = self.field.of_fraction(frac.numerator, frac.denominator)
            if reindex is not None:
                e = [0] * self.nvars
                for i, x in enumerate(m):
                    if x == 0:
                        continue
                    j = reindex[i]
                    if j is None:
                        raise ValueError(
                            f"variable {src.names[i]!r} not in target ring"
                        )
                    e[j] = x
                m = tuple(e)
            if not self.field.is_zero(c2):
                terms[m] = c2
        return Polynomial(self, terms)

    # -- monomial enumeration ------------------------------------------------

    def monomials_of_degree(self, d: int) -> list[Monomial]:
        """All exponent tuples of total degree exactly ``d``, in decreasing order."""
        out: list[Monomial] = []

        def rec(prefix: list[int], remaining: int, pos: int):
            if pos == self.nvars - 1:
                out.append(tuple(prefix + [remaining]))
                return
            for e in range(remaining, -1, -1):
                rec(prefix + [e], remaining - e, pos + 1)

        if self.nvars == 0:
            return [()] if d == 0 else []
        rec([], d, 0)
        out.sort(key=self.order.key, reverse=True)
        return out

    def monomials_up_to_degree(self, d: int) -> list[Monomial]:
        out: list[Monomial] = []
        for k in range(d + 1):
            out.extend(self.monomials_of_degree(k))
        return out

    # -- parsing / rendering -------------------------------------------------

    _token_re = re.compile(
        r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
    )

    def _tokenize(self, text: str) -> list[tuple[str, str]]:
        tokens = []
        pos = 0
        while pos < len(text):
            m = self._token_re.match(text, pos)
            if not m:
                rest = text[pos:].lstrip()
                if not rest:
                    break
                raise ParseError(f"unexpected character {rest[0]!r} in {text!r}")
            pos = m.end()
            for kind in ("num", "name", "op"):
                val = m.group(kind)
                if val is not None:
                    tokens.append((kind, val))
                    break
        tokens.append(("end", ""))
        return tokens

    def parse(self, text: str) -> "Polynomial":
        """Parse a polynomial expression over this ring's variables."""
        tokens = self._tokenize(text)
        pos = 0

        def peek():
            return tokens[pos]

        def take(kind=None, value=None):
            nonlocal pos
            k, v = tokens[pos]
            if kind is not None and k != kind:
                raise ParseError(f"expected {kind}, found {v!r} in {text!r}")
            if value is not None and v != value:
                raise ParseError(f"expected {value!r}, found {v!r} in {text!r}")
            pos += 1
            return v

        def atom() -> Polynomial:
            k, v = peek()
            if k == "num":
                take()
                if "/" in v:
                    num, den = v.split("/")
                    return self.constant(self.field.of_fraction(int(num), int(den)))
                return self.from_int(int(v))
            if k == "name":
                take()
                if v not in self._index:
                    raise ParseError(
                        f"unknown variable {v!r}; ring variables are {', '.join(self.names)}"
                    )
                return self.var(self._index[v])
            if (k, v) == ("op", "("):
                take()
                inner = expr()
                take("op", ")")
                return inner
            raise ParseError(f"unexpected token {v!r} in {text!r}")

        def factor() -> Polynomial:
            sign = 1
            while peek() == ("op", "-"):
                take()
                sign = -sign
            base = atom()
            if peek() == ("op", "^"):
                take()
                e = take("num")
                if "/" in e:
                    raise ParseError(f"exponent must be an integer, found {e!r}")
                base = base ** int(e)
            return -base if sign < 0 else base

        def term() -> Polynomial:
            result = factor()
            while peek() == ("op", "*"):
                take()
                result = result * factor()
            return result

        def expr() -> Polynomial:
            k, v = peek()
            negate = False
            if (k, v) == ("op", "-"):
                take()
                negate = True
            result = term()
            if negate:
                result = -result
            while peek()[0] == "op" and peek()[1] in "+-":
                op = take()
                rhs = term()
                result = result - rhs if op == "-" else result + rhs
            return result

        result = expr()
        if peek()[0] != "end":
            raise ParseError(f"trailing input {peek()[1]!r} in {text!r}")
        return result

    def render_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def render(self, f: "Polynomial") -> str:
        """Deterministic text form: terms in decreasing monomial order."""
        if not f.terms:
            return "0"
        field = self.field
        pieces = []
        for i, m in enumerate(sorted(f.terms, key=self.order.key, reverse=True)):
            c = f.terms[m]
            negative = field.characteristic == 0 and c < 0
            mag = -c if negative else c
            mono = self.render_monomial(m)
            if mono == "1":
                body = field.render(mag)
            elif field.is_zero(field.sub(mag, field.one)):
                body = mono
            else:
                body = f"{field.render(mag)}*{mono}"
            if i == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)


class Polynomial:
    """Immutable sparse polynomial over a :class:`PolyRing`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        """Total degree, with the convention deg 0 = -1."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.order.key)

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return [
            (m, self.terms[m])
            for m in sorted(self.terms, key=self.ring.order.key, reverse=True)
        ]

    def coeff(self, m: Monomial):
        return self.terms.get(tuple(m), self.ring.field.zero)

    def constant_coeff(self):
        return self.coeff((0,) * self.ring.nvars)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        self._check(other)
        field = self.ring.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = field.add(terms.get(m, field.zero), c)
            if field.is_zero(s):
                terms.pop(m, None)
            else:
                terms[m] = s
        return Polynomial(self.ring, terms)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, {m: field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        field = self.ring.field
        terms: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = field.add(terms.get(m, field.zero), field.mul(c1, c2))
                if field.is_zero(s):
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return Polynomial(self.ring, terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        if field.is_zero(c):
            return self.ring.zero
        return Polynomial(self.ring, {m: field.mul(c, v) for m, v in self.terms.items()})

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coeff()))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def mul_monomial(self, m: Monomial, c) -> "Polynomial":
        field = self.ring.field
        if field.is_zero(c):
            return self.ring.zero
        return Polynomial(
            self.ring,
            {monomial_mul(t, m): field.mul(c, v) for t, v in self.terms.items()},
        )

    # -- calculus and substitution -------------------------------------------

    def derivative(self, i: int) -> "Polynomial":
        """Formal partial derivative with respect to variable ``i``.

        In characteristic p the exponent is reduced mod p, so d/dx of x^p is 0.
        """
        field = self.ring.field
        terms: dict[Monomial, object] = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            c2 = field.mul(c, field.of_int(m[i]))
            if field.is_zero(c2):
                continue
            e = list(m)
            e[i] -= 1
            terms[tuple(e)] = c2
        return Polynomial(self.ring, terms)

    def substitute(self, target: PolyRing, images: list["Polynomial"],
                   coeff_map: Callable | None = None) -> "Polynomial":
        """Evaluate this polynomial at ``images`` inside ``target``.

        ``images[i]`` replaces variable ``i``; ``coeff_map`` (if given) is
        applied to each coefficient first, e.g. a Frobenius power or a change
        of field.
        """
        if len(images) != self.ring.nvars:
            raise ValueError("one image per variable required")
        field = target.field
        powers: list[dict[int, Polynomial]] = [dict() for _ in range(self.ring.nvars)]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        result = target.zero
        for m, c in self.terms.items():
            c2 = coeff_map(c) if coeff_map else c
            piece = target.constant(c2)
            for i, e in enumerate(m):
                if e:
                    piece = piece * power(i, e)
            result = result + piece
        return result

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return self.ring.render(self)
