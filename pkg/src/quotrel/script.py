"""Parser for the little declarative language driving the command line.

A script is a sequence of semicolon-terminated statements.  Declarations
bind names to rings, elements, ideals, algebras, maps, actions, relations,
cocycle data, and gluing data; commands invoke the library on those names.
Comments run from ``#`` to end of line.  Polynomial expressions are kept as
raw text in the AST and only interpreted during execution, inside the ring
they refer to, so the expression grammar is exactly the library's polynomial
parser (integers, rationals, ``+ - * ^``, parentheses).

The concrete grammar is documented in the README; ``parse_script`` returns a
:class:`Script` whose rendering reparses to an equal AST.
"""

__all__ = ["ScriptError", "Statement", "Script", "parse_script"]

_PUNCT = ("->", "(", ")", "[", "]", "=", ",", ";", ":", "|")

COMMAND_KINDS = (
    "groebner",
    "check",
    "intersect",
    "eliminate",
    "present",
    "verify-relation",
    "kernel-basis",
    "min-generators",
    "probe",
    "invariant-basis",
    "reynolds",
    "orbit-equation",
    "check-cocycle",
    "effectivity",
    "pinch",
    "verify-pushout",
    "subalgebra-intersection",
    "frobenius-exponent",
    "twist",
    "evaluate",
    "derivative",
    "monomials",
)

DECL_KINDS = (
    "ring",
    "poly",
    "ideal",
    "algebra",
    "map",
    "action",
    "relation",
    "cocycle",
    "pinchinput",
)


class ScriptError(ValueError):
    """Parse-time diagnostic with a source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class _Token:
    __slots__ = ("kind", "text", "line", "col", "pos")

    def __init__(self, kind, text, line, col, pos):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col
        self.pos = pos

    def __repr__(self):
        return f"{self.kind}({self.text!r}@{self.line}:{self.col})"


def _tokenize(text: str) -> list[_Token]:
    out = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_-"):
                j += 1
            # trailing hyphens belong to operators, not names
            while text[j - 1] == "-":
                j -= 1
            out.append(_Token("name", text[i:j], line, col, i))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("int", text[i:j], line, col, i))
            col += j - i
            i = j
            continue
        two = text[i : i + 2]
        if two == "->":
            out.append(_Token("punct", two, line, col, i))
            i += 2
            col += 2
            continue
        if ch in "()[]=,;:|/*+-^":
            out.append(_Token("punct", ch, line, col, i))
            i += 1
            col += 1
            continue
        raise ScriptError(f"unexpected character {ch!r}", line, col)
    return out


class Statement:
    """One parsed statement: a kind tag plus its fields."""

    def __init__(self, kind: str, fields: dict, line: int):
        self.kind = kind
        self.fields = fields
        self.line = line

    def __eq__(self, other):
        return (
            isinstance(other, Statement)
            and self.kind == other.kind
            and self.fields == other.fields
        )

    def __repr__(self):
        return f"Statement({self.kind}, {self.fields})"

    def render(self) -> str:
        f = self.fields
        k = self.kind
        if k == "ring":
            comps = []
            for c in f["components"]:
                fld = c["field"]
                head = "QQ" if fld == "QQ" else f"FF({fld[1]})"
                part = f"{head}[{', '.join(c['names'])}]"
                if c["quotient"]:
                    part += f" / ({', '.join(c['quotient'])})"
                comps.append(part)
            return f"ring {f['name']} = " + " * ".join(comps)
        if k == "poly":
            tail = f" in {f['ring']}" if f["ring"] else ""
            return f"poly {f['name']} = {f['expr']}{tail}"
        if k in ("ideal", "algebra"):
            tail = f" in {f['ring']}" if f["ring"] else ""
            return f"{k} {f['name']} = ({', '.join(f['exprs'])}){tail}"
        if k == "map":
            return (
                f"map {f['name']} : {f['source']} -> {f['target']} = "
                f"({', '.join(f['exprs'])})"
            )
        if k == "action":
            body = " | ".join(", ".join(t) for t in f["tuples"])
            return f"action {f['name']} on {f['ring']} = ({body})"
        if k == "relation":
            if f["how"] == "explicit":
                body = f"({', '.join(f['exprs'])})"
            elif f["how"] == "from-map":
                body = f"from-map ({', '.join(f['exprs'])})"
            else:
                body = f"from-action {f['action']}"
            return f"relation {f['name']} on {f['ring']} = {body}"
        if k == "cocycle":
            return (
                f"cocycle {f['name']} on {f['ring']} = "
                f"maps ({', '.join(f['maps'])}) poly {f['poly']}"
            )
        if k == "pinchinput":
            return (
                f"pinchinput {f['name']} in {f['ring']} = "
                f"ideal ({', '.join(f['ideal'])}) "
                f"sub ({', '.join(f['sub'])}) "
                f"module ({', '.join(f['module'])})"
            )
        if k == "groebner":
            return f"groebner {f['ideal']}"
        if k == "check":
            return f"check {f['target']} {f['op']} {f['expr']}"
        if k == "intersect":
            return f"intersect {f['a']} {f['b']}"
        if k == "eliminate":
            return f"eliminate {f['ideal']} drop {', '.join(f['names'])}"
        if k == "present":
            out = f"present {f['algebra']}"
            if f["names"]:
                out += f" names {', '.join(f['names'])}"
            return out
        if k == "verify-relation":
            return f"verify-relation {f['relation']}"
        if k in ("kernel-basis", "min-generators", "probe"):
            src = f["source"]
            ref = src[1] if src[0] == "rel" else f"({src[1]}, {src[2]})"
            return f"{k} {ref}"
        if k == "invariant-basis":
            return f"invariant-basis {f['action']}"
        if k in ("reynolds", "orbit-equation"):
            return f"{k} {f['action']} {f['expr']}"
        if k in ("check-cocycle", "effectivity"):
            return f"{k} {f['cocycle']}"
        if k == "pinch":
            out = f"pinch {f['pinchinput']}"
            if f["names"]:
                out += f" names {', '.join(f['names'])}"
            return out
        if k == "verify-pushout":
            if f.get("diagram"):
                a, b, c = f["diagram"]
                return f"verify-pushout diagram {a} {b} {c}"
            return f"verify-pushout {f['pinchinput']}"
        if k == "subalgebra-intersection":
            return f"subalgebra-intersection {f['a']} {f['b']}"
        if k == "frobenius-exponent":
            out = f"frobenius-exponent {f['sub']} {f['alg']}"
            if f["rmax"] is not None:
                out += f" rmax = {f['rmax']}"
            return out
        if k == "twist":
            return f"twist {f['q']} {f['expr']} in {f['ring']}"
        if k == "evaluate":
            return f"evaluate {f['map']} {f['expr']}"
        if k == "derivative":
            return f"derivative {f['expr']} wrt {f['var']} in {f['ring']}"
        if k == "monomials":
            return f"monomials {f['ring']} degree {f['degree']}"
        raise AssertionError(f"unrenderable statement kind {k}")


class Script:
    def __init__(self, statements: list[Statement]):
        self.statements = statements

    def __eq__(self, other):
        return isinstance(other, Script) and self.statements == other.statements

    def render(self) -> str:
        return "".join(s.render() + ";\n" for s in self.statements)


class _Parser:
    def __init__(self, text: str, tokens: list[_Token], end_pos: int):
        self.text = text
        self.toks = tokens
        self.pos = 0
        self.end_pos = end_pos

    # -- primitives -----------------------------------------------------------

    def error(self, message: str):
        if self.pos < len(self.toks):
            t = self.toks[self.pos]
            raise ScriptError(message, t.line, t.col)
        if self.toks:
            t = self.toks[-1]
            raise ScriptError(message + " (at end of input)", t.line,
                              t.col + len(t.text))
        raise ScriptError(message + " (at end of input)", 1, 1)

    def done(self) -> bool:
        return self.pos >= len(self.toks)

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        if self.done():
            self.error("unexpected end of statement")
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, text: str):
        t = self.take()
        if t.text != text:
            self.pos -= 1
            self.error(f"expected {text!r}, found {t.text!r}")
        return t

    def take_name(self, what="name"):
        t = self.take()
        if t.kind != "name":
            self.pos -= 1
            self.error(f"expected {what}, found {t.text!r}")
        return t.text

    def take_int(self) -> int:
        t = self.take()
        if t.kind != "int":
            self.pos -= 1
            self.error(f"expected integer, found {t.text!r}")
        return int(t.text)

    def at(self, text: str) -> bool:
        t = self.peek()
        return t is not None and t.text == text

    # -- spans ----------------------------------------------------------------

    def _span_text(self, start_idx: int, stop_idx: int) -> str:
        if start_idx >= stop_idx:
            self.error("empty expression")
        a = self.toks[start_idx].pos
        if stop_idx < len(self.toks):
            b = self.toks[stop_idx].pos
        else:
            b = self.end_pos
        return self.text[a:b].strip()

    def take_expr(self, stops=()) -> str:
        """Consume tokens up to a top-level stop word, comma, or ')'."""
        start = self.pos
        depth = 0
        while not self.done():
            t = self.peek()
            if depth == 0 and (
                (t.kind == "punct" and t.text in (",", ")", "|"))
                or (t.kind == "name" and t.text in stops)
            ):
                break
            if t.text == "(":
                depth += 1
            elif t.text == ")":
                depth -= 1
            self.pos += 1
        return self._span_text(start, self.pos)

    def take_expr_list(self, stops=()) -> list[str]:
        """Parenthesized, comma-separated expressions (possibly empty)."""
        self.expect("(")
        out = []
        if self.at(")"):
            self.take()
            return out
        while True:
            out.append(self.take_expr(stops))
            t = self.take()
            if t.text == ")":
                return out
            if t.text != ",":
                self.pos -= 1
                self.error("expected ',' or ')'")

    def take_name_list(self) -> list[str]:
        names = [self.take_name()]
        while self.at(","):
            self.take()
            names.append(self.take_name())
        return names

    # -- statements -----------------------------------------------------------

    def parse_statement(self) -> Statement:
        head = self.peek()
        kw = self.take_name("statement keyword")
        if kw in DECL_KINDS:
            fields = getattr(self, "decl_" + kw)()
        elif kw in COMMAND_KINDS:
            fields = getattr(self, "cmd_" + kw.replace("-", "_"))()
        else:
            self.pos -= 1
            self.error(f"unknown statement keyword {kw!r}")
        if not self.done():
            self.error("unexpected trailing input in statement")
        return Statement(kw, fields, head.line)

    # declarations

    def decl_ring(self):
        name = self.take_name()
        self.expect("=")
        comps = [self._ring_component()]
        while self.at("*"):
            self.take()
            comps.append(self._ring_component())
        return {"name": name, "components": comps}

    def _ring_component(self):
        fld = self.take_name("field")
        if fld == "QQ":
            field = "QQ"
        elif fld == "FF":
            self.expect("(")
            p = self.take_int()
            self.expect(")")
            field = ("FF", p)
        else:
            self.pos -= 1
            self.error("expected field QQ or FF(p)")
        self.expect("[")
        names = self.take_name_list()
        self.expect("]")
        quotient = []
        if self.at("/"):
            self.take()
            quotient = self.take_expr_list()
        return {"field": field, "names": names, "quotient": quotient}

    def _opt_ring(self):
        """Trailing ``in <ring>`` clause; None means "the only ring in scope"."""
        if self.at("in"):
            self.take()
            return self.take_name("ring name")
        return None

    def decl_poly(self):
        name = self.take_name()
        self.expect("=")
        expr = self.take_expr(stops=("in",))
        return {"name": name, "expr": expr, "ring": self._opt_ring()}

    def decl_ideal(self):
        name = self.take_name()
        self.expect("=")
        exprs = self.take_expr_list()
        return {"name": name, "exprs": exprs, "ring": self._opt_ring()}

    decl_algebra = decl_ideal

    def decl_map(self):
        name = self.take_name()
        self.expect(":")
        source = self.take_name("source ring")
        self.expect("->")
        target = self.take_name("target ring")
        self.expect("=")
        exprs = self.take_expr_list()
        return {"name": name, "source": source, "target": target,
                "exprs": exprs}

    def decl_action(self):
        name = self.take_name()
        self.expect("on")
        ring = self.take_name("ring name")
        self.expect("=")
        self.expect("(")
        tuples = [[]]
        while True:
            tuples[-1].append(self.take_expr())
            t = self.take()
            if t.text == ")":
                break
            if t.text == ",":
                continue
            if t.text == "|":
                tuples.append([])
                continue
            self.pos -= 1
            self.error("expected ',', '|', or ')'")
        return {"name": name, "ring": ring, "tuples": tuples}

    def decl_relation(self):
        name = self.take_name()
        self.expect("on")
        ring = self.take_name("ring name")
        self.expect("=")
        if self.at("from-map"):
            self.take()
            return {"name": name, "ring": ring, "how": "from-map",
                    "exprs": self.take_expr_list()}
        if self.at("from-action"):
            self.take()
            return {"name": name, "ring": ring, "how": "from-action",
                    "action": self.take_name("action name")}
        return {"name": name, "ring": ring, "how": "explicit",
                "exprs": self.take_expr_list()}

    def decl_cocycle(self):
        name = self.take_name()
        self.expect("on")
        ring = self.take_name("ring name")
        self.expect("=")
        self.expect("maps")
        maps = self.take_expr_list()
        self.expect("poly")
        poly = self.take_expr()
        return {"name": name, "ring": ring, "maps": maps, "poly": poly}

    def decl_pinchinput(self):
        name = self.take_name()
        self.expect("in")
        ring = self.take_name("ring name")
        self.expect("=")
        self.expect("ideal")
        ideal = self.take_expr_list(stops=("sub",))
        self.expect("sub")
        sub = self.take_expr_list(stops=("module",))
        self.expect("module")
        module = self.take_expr_list()
        return {"name": name, "ring": ring, "ideal": ideal, "sub": sub,
                "module": module}

    # commands

    def cmd_groebner(self):
        return {"ideal": self.take_name("ideal name")}

    def cmd_check(self):
        target = self.take_name("ideal or algebra name")
        op = self.take_name("membership keyword")
        if op not in ("member", "radical-member", "subalgebra-member"):
            self.pos -= 1
            self.error("expected member, radical-member or subalgebra-member")
        return {"target": target, "op": op, "expr": self.take_expr()}

    def cmd_intersect(self):
        return {"a": self.take_name(), "b": self.take_name()}

    def cmd_eliminate(self):
        ideal = self.take_name("ideal name")
        self.expect("drop")
        return {"ideal": ideal, "names": self.take_name_list()}

    def cmd_present(self):
        alg = self.take_name("algebra name")
        names = []
        if self.at("names"):
            self.take()
            names = self.take_name_list()
        return {"algebra": alg, "names": names}

    def cmd_verify_relation(self):
        return {"relation": self.take_name("relation name")}

    def _source_ref(self):
        if self.at("("):
            self.take()
            a = self.take_name("map name")
            self.expect(",")
            b = self.take_name("map name")
            self.expect(")")
            return ("pair", a, b)
        return ("rel", self.take_name("relation name"))

    def cmd_kernel_basis(self):
        return {"source": self._source_ref()}

    cmd_min_generators = cmd_kernel_basis
    cmd_probe = cmd_kernel_basis

    def cmd_invariant_basis(self):
        return {"action": self.take_name("action name")}

    def cmd_reynolds(self):
        return {"action": self.take_name("action name"),
                "expr": self.take_expr()}

    cmd_orbit_equation = cmd_reynolds

    def cmd_check_cocycle(self):
        return {"cocycle": self.take_name("cocycle name")}

    cmd_effectivity = cmd_check_cocycle

    def cmd_pinch(self):
        pin = self.take_name("pinch input name")
        names = []
        if self.at("names"):
            self.take()
            names = self.take_name_list()
        return {"pinchinput": pin, "names": names}

    def cmd_verify_pushout(self):
        if self.at("diagram"):
            self.take()
            a = self.take_name("algebra name")
            b = self.take_name("algebra name")
            c = self.take_name("algebra name")
            return {"diagram": (a, b, c)}
        return {"pinchinput": self.take_name("pinch input name"),
                "diagram": None}

    def cmd_subalgebra_intersection(self):
        return {"a": self.take_name(), "b": self.take_name()}

    def cmd_frobenius_exponent(self):
        sub = self.take_name("subalgebra name")
        alg = self.take_name("algebra name")
        rmax = None
        if self.at("rmax"):
            self.take()
            self.expect("=")
            rmax = self.take_int()
        return {"sub": sub, "alg": alg, "rmax": rmax}

    def cmd_twist(self):
        q = self.take_int()
        expr = self.take_expr(stops=("in",))
        self.expect("in")
        return {"q": q, "expr": expr, "ring": self.take_name("ring name")}

    def cmd_evaluate(self):
        return {"map": self.take_name("map name"), "expr": self.take_expr()}

    def cmd_derivative(self):
        expr = self.take_expr(stops=("wrt",))
        self.expect("wrt")
        var = self.take_name("variable name")
        self.expect("in")
        return {"expr": expr, "var": var, "ring": self.take_name("ring name")}

    def cmd_monomials(self):
        ring = self.take_name("ring name")
        self.expect("degree")
        return {"ring": ring, "degree": self.take_int()}


def parse_script(text: str) -> Script:
    """Parse source text into a :class:`Script`, or raise :class:`ScriptError`."""
    tokens = _tokenize(text)
    statements = []
    start = 0
    for i, t in enumerate(tokens):
        if t.kind == "punct" and t.text == ";":
            chunk = tokens[start:i]
            if not chunk:
                raise ScriptError("empty statement", t.line, t.col)
            sub = _Parser(text, chunk, t.pos)
            statements.append(sub.parse_statement())
            start = i + 1
    if start < len(tokens):
        last = tokens[-1]
        raise ScriptError(
            "unterminated statement (missing ';') at end of input",
            last.line, last.col + len(last.text),
        )
    return Script(statements)
