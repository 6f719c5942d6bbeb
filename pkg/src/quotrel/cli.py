"""Command-line front end: execute scripts against the library.

Usage: ``quotrel SCRIPT [--max-degree N] [--primes p,q] [--mode scheme|set]
[--budget N] [--format text|json]`` where SCRIPT is a file path or ``-`` for
stdin.  Exit codes: 0 all commands succeeded, 1 at least one check failed,
2 parse or usage error, 3 computation budget exceeded.
"""

import argparse
import json
import sys

from .effectivity import CocycleData, check_cocycle, change_field, effectivity_test
from .eqrel import RelationPresentation, relation_from_group_action, relation_from_map, verify_relation
from .fields import GF, QQ
from .frobenius import frobenius_exponent, frobenius_twist
from .groebner import (
    BudgetExceededError,
    eliminate,
    groebner_basis,
    ideal_intersect,
    ideal_member,
    radical_member,
)
from .invariants import GroupAction, invariant_basis, orbit_symmetric_generators, reynolds_project
from .pinch import (
    PinchInput,
    pinch_generators,
    subalgebra_intersection_trunc,
    verify_pushout,
    verify_pushout_diagram,
)
from .poly import GREVLEX, ParseError, PolyRing
from .quotient import coequalizer_kernel_basis, noetherian_probe, present_subalgebra
from .ring import AmbientRing, RingMap
from .script import ScriptError, parse_script

__all__ = ["main", "run_script", "CliError", "Report"]

REPORT_VERSION = 1


class CliError(Exception):
    """Execution-time failure with the exit code it should produce."""

    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


class Report:
    """Accumulated command results plus the process exit status."""

    def __init__(self):
        self.blocks: list[dict] = []
        self.status = 0
        self.error: str | None = None

    def add(self, block: dict):
        self.blocks.append(block)
        if block.pop("failed", False):
            self.status = max(self.status, 1)

    def render_text(self) -> str:
        out = []
        for b in self.blocks:
            out.append("$ " + b["command"])
            if b["inputs"]:
                out.append("inputs: " + ", ".join(b["inputs"]))
            for name, rows in b["tables"].items():
                if name:
                    out.append(name + ":")
                out.extend(rows)
            if b["verdict"] is not None:
                out.append("verdict: " + b["verdict"])
            out.append("")
        if self.error is not None:
            out.append("error: " + self.error)
        return "\n".join(out)

    def render_json(self) -> str:
        doc = {
            "version": REPORT_VERSION,
            "status": self.status,
            "results": [
                {
                    "command": b["command"],
                    "inputs": b["inputs"],
                    "verdict": b["verdict"],
                    "witnesses": b["witnesses"],
                    "tables": b["tables"],
                }
                for b in self.blocks
            ],
        }
        if self.error is not None:
            doc["error"] = self.error
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _split_top_commas(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i].strip())
            start = i + 1
    parts.append(text[start:].strip())
    return parts


class _Executor:
    def __init__(self, options):
        self.opt = options
        self.env: dict[str, dict] = {}
        self.report = Report()

    # -- environment ----------------------------------------------------------

    def bind(self, name: str, kind: str, obj, desc: str):
        if name in self.env:
            raise CliError(f"name {name!r} is already declared")
        self.env[name] = {"kind": kind, "obj": obj, "desc": desc}

    def lookup(self, name: str, kind: str):
        entry = self.env.get(name)
        if entry is None:
            raise CliError(f"undeclared name {name!r}")
        if entry["kind"] != kind:
            raise CliError(
                f"{name!r} is a {entry['kind']}, expected a {kind}"
            )
        return entry["obj"]

    def describe(self, name: str) -> str:
        return f"{name} ({self.env[name]['desc']})"

    def ring(self, name: str | None) -> AmbientRing:
        return self.lookup(self.ring_name(name), "ring")

    def ring_name(self, name: str | None) -> str:
        if name is not None:
            return name
        rings = [k for k, v in self.env.items() if v["kind"] == "ring"]
        if len(rings) == 1:
            return rings[0]
        if not rings:
            raise CliError("no ring declared yet; write 'in <ring>'")
        raise CliError(
            "several rings are in scope; say which with 'in <ring>'"
        )

    def _named_element(self, ring: AmbientRing, text: str):
        """A bare declared-poly name used where an expression is expected."""
        word = text.strip()
        entry = self.env.get(word)
        if entry is None or entry["kind"] != "poly":
            return None
        if any(word in ring.poly_ring(c).names
               for c in range(ring.ncomponents)):
            return None  # ring variables shadow declared names
        el, _ = entry["obj"]
        if el.ring is not ring:
            raise CliError(f"{word!r} lives in a different ring")
        return el

    def expr_input(self, ring: AmbientRing, text: str) -> str:
        """Provenance line for an expression slot: named input or inline."""
        if self._named_element(ring, text) is not None:
            return self.describe(text.strip())
        return f"{text} (inline)"

    def parse_poly(self, ring: AmbientRing, text: str):
        el = self._named_element(ring, text)
        if el is not None:
            if ring.ncomponents != 1:
                raise CliError(
                    "expected a one-component ring for a bare polynomial"
                )
            return el.parts[0]
        if ring.ncomponents == 1:
            return ring.poly_ring(0).parse(text)
        raise CliError("expected a one-component ring for a bare polynomial")

    def parse_element(self, ring: AmbientRing, text: str):
        el = self._named_element(ring, text)
        if el is not None:
            return el
        if ring.ncomponents == 1:
            return ring.embed(0, ring.poly_ring(0).parse(text))
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise CliError(
                "elements of a product ring are written (p1, ..., pk)"
            )
        parts = _split_top_commas(body[1:-1])
        if len(parts) != ring.ncomponents:
            raise CliError(
                f"expected {ring.ncomponents} components, got {len(parts)}"
            )
        return ring.element(
            [ring.poly_ring(c).parse(p) for c, p in enumerate(parts)]
        )

    # -- declarations ----------------------------------------------------------

    def exec_ring(self, st):
        f = st.fields
        comps = []
        for c in f["components"]:
            field = QQ if c["field"] == "QQ" else GF(c["field"][1])
            pr = PolyRing(field, tuple(c["names"]), GREVLEX)
            q = [pr.parse(t) for t in c["quotient"]]
            comps.append((pr, q))
        ring = AmbientRing(comps, budget=self.opt.budget)
        self.bind(f["name"], "ring", ring, f"ring {ring.render()}")

    def exec_poly(self, st):
        f = st.fields
        rname = self.ring_name(f["ring"])
        ring = self.ring(rname)
        el = self.parse_element(ring, f["expr"])
        self.bind(f["name"], "poly", (el, rname), f"element of {rname}")

    def exec_ideal(self, st):
        f = st.fields
        rname = self.ring_name(f["ring"])
        ring = self.ring(rname)
        polys = [self.parse_poly(ring, t) for t in f["exprs"]]
        self.bind(f["name"], "ideal", (polys, rname), f"ideal in {rname}")

    def exec_algebra(self, st):
        f = st.fields
        rname = self.ring_name(f["ring"])
        ring = self.ring(rname)
        gens = [self.parse_element(ring, t) for t in f["exprs"]]
        self.bind(f["name"], "algebra", (gens, rname), f"algebra in {rname}")

    def exec_map(self, st):
        f = st.fields
        source = self.ring(f["source"])
        target = self.ring(f["target"])
        if source.ncomponents != 1 or target.ncomponents != 1:
            raise CliError("map declarations expect one-component rings")
        if len(f["exprs"]) != source.poly_ring(0).nvars:
            raise CliError("need one image per source variable")
        images = [target.poly_ring(0).parse(t) for t in f["exprs"]]
        m = RingMap.on_polys(source, target, images)
        if not m.is_well_defined():
            raise CliError(
                f"map {f['name']} does not respect the defining ideal"
            )
        self.bind(f["name"], "map", m,
                  f"map {f['source']} -> {f['target']}")

    def exec_action(self, st):
        f = st.fields
        ring = self.ring(f["ring"])
        if ring.ncomponents != 1:
            raise CliError("actions are declared on one-component rings")
        pr = ring.poly_ring(0)
        maps = []
        for images in f["tuples"]:
            if len(images) != pr.nvars:
                raise CliError("need one image per ring variable")
            maps.append(RingMap.on_polys(ring, ring,
                                         [pr.parse(t) for t in images]))
        action = GroupAction(ring, maps)
        action.validate()
        self.bind(f["name"], "action", action,
                  f"group action on {f['ring']} of order {action.order}")

    def exec_relation(self, st):
        f = st.fields
        ring = self.ring(f["ring"])
        if f["how"] == "from-map":
            pr = ring.poly_ring(0)
            rel = relation_from_map(ring, [pr.parse(t) for t in f["exprs"]])
        elif f["how"] == "from-action":
            rel = relation_from_group_action(
                self.lookup(f["action"], "action")
            )
        else:
            probe = RelationPresentation(ring, [])
            gens = [probe.doubled.parse(t) for t in f["exprs"]]
            rel = RelationPresentation(ring, gens)
        self.bind(f["name"], "relation", rel,
                  f"relation on {f['ring']} ({f['how']})")

    def exec_cocycle(self, st):
        f = st.fields
        ring = self.ring(f["ring"])
        pr = ring.poly_ring(0)
        data = CocycleData(ring, [pr.parse(t) for t in f["maps"]], f["poly"],
                           budget=self.opt.budget)
        data.validate()
        self.bind(f["name"], "cocycle", data,
                  f"cocycle data on {f['ring']}, degree {data.degree}")

    def exec_pinchinput(self, st):
        f = st.fields
        ring = self.ring(f["ring"])
        inp = PinchInput(
            ring,
            iz_gens=[self.parse_element(ring, t) for t in f["ideal"]],
            s_lifts=[self.parse_element(ring, t) for t in f["sub"]],
            module_gens=[self.parse_element(ring, t) for t in f["module"]],
            budget=self.opt.budget,
        )
        self.bind(f["name"], "pinchinput", inp,
                  f"gluing data on {f['ring']}")

    # -- commands ---------------------------------------------------------------

    def block(self, st, inputs, tables, verdict=None, witnesses=(),
              failed=False):
        self.report.add({
            "command": st.render(),
            "inputs": list(inputs),
            "tables": tables,
            "verdict": verdict,
            "witnesses": list(witnesses),
            "failed": failed,
        })

    def _ideal(self, name):
        polys, ring_name = self.lookup(name, "ideal")
        return polys, self.ring(ring_name)

    def _algebra(self, name):
        gens, ring_name = self.lookup(name, "algebra")
        return gens, self.ring(ring_name)

    def exec_groebner(self, st):
        name = st.fields["ideal"]
        polys, ring = self._ideal(name)
        gb = groebner_basis(polys, self.opt.budget)
        pr = ring.poly_ring(0)
        rows = [pr.render(g) for g in gb] or ["(zero ideal)"]
        self.block(st, [self.describe(name)],
                   {"reduced basis": rows})

    def exec_check(self, st):
        f = st.fields
        name, op = f["target"], f["op"]
        witnesses = []
        if op == "subalgebra-member":
            gens, ring = self._algebra(name)
            el = self.parse_element(ring, f["expr"])
            from .ring import subalgebra_member_ring

            ok, cert = subalgebra_member_ring(el, gens,
                                              budget=self.opt.budget)
            rows = []
            if ok:
                rows.append("certificate: " + cert.ring.render(cert))
                witnesses.append(cert.ring.render(cert))
        else:
            polys, ring = self._ideal(name)
            g = self.parse_poly(ring, f["expr"])
            if op == "member":
                ok = ideal_member(g, groebner_basis(polys, self.opt.budget))
            else:
                ok = radical_member(g, polys, self.opt.budget)
            rows = []
        self.block(
            st, [self.describe(name), self.expr_input(ring, f["expr"])],
            {"": rows} if rows else {},
            verdict="member" if ok else "not-member",
            witnesses=witnesses,
            failed=not ok,
        )

    def exec_intersect(self, st):
        f = st.fields
        pa, ring = self._ideal(f["a"])
        pb, ring_b = self._ideal(f["b"])
        if ring is not ring_b:
            raise CliError("ideals live in different rings")
        gb = ideal_intersect(pa, pb, self.opt.budget)
        pr = ring.poly_ring(0)
        rows = [pr.render(g) for g in gb] or ["(zero ideal)"]
        self.block(st, [self.describe(f["a"]), self.describe(f["b"])],
                   {"intersection basis": rows})

    def exec_eliminate(self, st):
        f = st.fields
        polys, ring = self._ideal(f["ideal"])
        pr = ring.poly_ring(0)
        drop = []
        for nm in f["names"]:
            if nm not in pr.names:
                raise CliError(f"{nm!r} is not a variable of the ring")
            drop.append(pr.names.index(nm))
        gb = eliminate(polys, drop, self.opt.budget)
        rows = [pr.render(g) for g in gb] or ["(zero ideal)"]
        self.block(st, [self.describe(f["ideal"])],
                   {"elimination basis": rows})

    def exec_present(self, st):
        f = st.fields
        gens, _ring = self._algebra(f["algebra"])
        names = f["names"] or None
        out_ring, ideal = present_subalgebra(gens, names=names,
                                             budget=self.opt.budget)
        rows = [
            "generators named: " + ", ".join(out_ring.names),
            "relations: "
            + (", ".join(out_ring.render(g) for g in ideal) if ideal
               else "(0)"),
        ]
        self.block(st, [self.describe(f["algebra"])], {"presentation": rows})

    def exec_verify_relation(self, st):
        name = st.fields["relation"]
        rel = self.lookup(name, "relation")
        rep = verify_relation(rel, mode=self.opt.mode)
        witnesses = [
            w.ring.render(w) for w in rep.witnesses.values() if w is not None
        ]
        self.block(
            st, [self.describe(name), f"mode={self.opt.mode}"],
            {"": rep.render().splitlines()},
            verdict="pass" if rep.all_pass else "fail",
            witnesses=witnesses,
            failed=not rep.all_pass,
        )

    def _source(self, ref):
        if ref[0] == "rel":
            rel = self.lookup(ref[1], "relation")
            return rel, [self.describe(ref[1])]
        m1 = self.lookup(ref[1], "map")
        m2 = self.lookup(ref[2], "map")
        return (m1, m2), [self.describe(ref[1]), self.describe(ref[2])]

    def exec_kernel_basis(self, st):
        source, inputs = self._source(st.fields["source"])
        trunc = coequalizer_kernel_basis(source, self.opt.max_degree,
                                         self.opt.budget)
        dims = trunc.dims()
        rows = trunc.render_basis().splitlines()
        rows.append(f"dimensions by degree: {dims}")
        self.block(st, inputs + [f"degree bound {self.opt.max_degree}"],
                   {"kernel basis": rows})

    def exec_min_generators(self, st):
        source, inputs = self._source(st.fields["source"])
        trunc = coequalizer_kernel_basis(source, self.opt.max_degree,
                                         self.opt.budget)
        gens = trunc.minimal_generators()
        rows = [f"degree {e}: {el.render()}" for el, e in gens]
        self.block(st, inputs + [f"degree bound {self.opt.max_degree}"],
                   {"minimal generators": rows})

    def exec_probe(self, st):
        source, inputs = self._source(st.fields["source"])
        rep = noetherian_probe(source, self.opt.max_degree, self.opt.budget)
        self.block(st, inputs + [f"degree bound {self.opt.max_degree}"],
                   {"generator growth": rep.render().splitlines()})

    def exec_invariant_basis(self, st):
        name = st.fields["action"]
        action = self.lookup(name, "action")
        per_degree = invariant_basis(action, self.opt.max_degree)
        pr = action.ring.poly_ring(0)
        rows = []
        for e, basis in enumerate(per_degree):
            if basis:
                rows.append(
                    f"degree {e}: " + ", ".join(pr.render(b) for b in basis)
                )
        self.block(st, [self.describe(name),
                        f"degree bound {self.opt.max_degree}"],
                   {"invariants": rows})

    def exec_reynolds(self, st):
        f = st.fields
        action = self.lookup(f["action"], "action")
        pr = action.ring.poly_ring(0)
        g = reynolds_project(self.parse_poly(action.ring, f["expr"]), action)
        self.block(st, [self.describe(f["action"]),
                        self.expr_input(action.ring, f["expr"])],
                   {"": ["projection: " + pr.render(g)]})

    def exec_orbit_equation(self, st):
        f = st.fields
        action = self.lookup(f["action"], "action")
        pr = action.ring.poly_ring(0)
        sigmas, equation = orbit_symmetric_generators(
            self.parse_poly(action.ring, f["expr"]), action
        )
        rows = [
            f"sigma_{j + 1} = {pr.render(s)}" for j, s in enumerate(sigmas)
        ]
        rows.append("equation: " + equation.ring.render(equation) + " = 0")
        self.block(st, [self.describe(f["action"]),
                        self.expr_input(action.ring, f["expr"])],
                   {"orbit equation": rows})

    def exec_check_cocycle(self, st):
        name = st.fields["cocycle"]
        data = self.lookup(name, "cocycle")
        ok = check_cocycle(data)
        self.block(st, [self.describe(name)], {},
                   verdict="cocycle" if ok else "not-cocycle",
                   failed=not ok)

    def exec_effectivity(self, st):
        name = st.fields["cocycle"]
        data = self.lookup(name, "cocycle")
        tables = {}
        fields = [data.ambient.field]
        if data.ambient.field.characteristic == 0:
            fields += [GF(p) for p in self.opt.primes]
        verdicts = []
        for fld in fields:
            d = data if fld == data.ambient.field else change_field(data, fld)
            rep = effectivity_test(d)
            tables[f"over {fld!r}"] = rep.render().splitlines()
            verdicts.append(rep.verdict)
        verdict = verdicts[0] if len(set(verdicts)) == 1 else "mixed"
        self.block(
            st,
            [self.describe(name),
             "primes " + ",".join(str(p) for p in self.opt.primes)],
            tables, verdict=verdict,
        )

    def exec_pinch(self, st):
        f = st.fields
        name = f["pinchinput"]
        inp = self.lookup(name, "pinchinput")
        res = pinch_generators(inp, self.opt.max_degree,
                               names=f["names"] or None)
        self.block(st, [self.describe(name),
                        f"degree bound {self.opt.max_degree}"],
                   {"": res.render().splitlines()})

    def exec_verify_pushout(self, st):
        f = st.fields
        if f.get("diagram"):
            a, b, c = f["diagram"]
            ga, ring_a = self._algebra(a)
            gb_, ring_b = self._algebra(b)
            gc, ring_c = self._algebra(c)
            if not (ring_a is ring_b is ring_c):
                raise CliError("diagram algebras live in different rings")
            if ring_a.ncomponents != 1 or ring_a.q_gens(0):
                raise CliError("diagram checks run in a free polynomial ring")
            rep = verify_pushout_diagram(
                [g.parts[0] for g in ga],
                [g.parts[0] for g in gb_],
                [g.parts[0] for g in gc],
                self.opt.max_degree, budget=self.opt.budget,
            )
            inputs = [self.describe(a), self.describe(b), self.describe(c)]
        else:
            name = f["pinchinput"]
            inp = self.lookup(name, "pinchinput")
            res = pinch_generators(inp, self.opt.max_degree)
            rep = verify_pushout(inp, res, self.opt.max_degree)
            inputs = [self.describe(name)]
        wit = rep.witness()
        lines = [ln for ln in rep.render().splitlines() if not ln.startswith("verdict:")]
        self.block(
            st, inputs + [f"degree bound {self.opt.max_degree}"],
            {"": lines},
            verdict="push-out" if rep.passed else "not-push-out",
            witnesses=[wit.render()] if wit is not None else [],
            failed=not rep.passed,
        )

    def exec_subalgebra_intersection(self, st):
        f = st.fields
        ga, ring_a = self._algebra(f["a"])
        gb_, ring_b = self._algebra(f["b"])
        if ring_a is not ring_b:
            raise CliError("algebras live in different rings")
        if ring_a.ncomponents != 1 or ring_a.q_gens(0):
            raise CliError("intersection runs in a free polynomial ring")
        trunc = subalgebra_intersection_trunc(
            [g.parts[0] for g in ga],
            [g.parts[0] for g in gb_],
            self.opt.max_degree, budget=self.opt.budget,
        )
        rows = trunc.render_basis().splitlines()
        rows.append(f"dimensions by degree: {trunc.dims()}")
        self.block(st, [self.describe(f["a"]), self.describe(f["b"]),
                        f"degree bound {self.opt.max_degree}"],
                   {"intersection basis": rows})

    def exec_frobenius_exponent(self, st):
        f = st.fields
        sub, ring_a = self._algebra(f["sub"])
        alg, ring_b = self._algebra(f["alg"])
        if ring_a is not ring_b:
            raise CliError("algebras live in different rings")
        rmax = f["rmax"] if f["rmax"] is not None else 8
        w = frobenius_exponent(sub, alg, r_max=rmax, budget=self.opt.budget)
        if w is None:
            rows = [f"no exponent found with r <= {rmax}"]
            verdict = "not-found"
        else:
            rows = w.render().splitlines()
            verdict = "found"
        self.block(st, [self.describe(f["sub"]), self.describe(f["alg"]),
                        f"rmax {rmax}"],
                   {"": rows}, verdict=verdict)

    def exec_twist(self, st):
        f = st.fields
        ring = self.ring(f["ring"])
        pr = ring.poly_ring(0)
        g = frobenius_twist(self.parse_poly(ring, f["expr"]), f["q"])
        self.block(st, [self.expr_input(ring, f["expr"]),
                        self.describe(f["ring"])],
                   {"": ["twist: " + pr.render(g)]})

    def exec_evaluate(self, st):
        f = st.fields
        m = self.lookup(f["map"], "map")
        el = self.parse_element(m.source, f["expr"])
        out = m.apply(el)
        self.block(st, [self.describe(f["map"]),
                        self.expr_input(m.source, f["expr"])],
                   {"": ["image: " + out.render()]})

    def exec_derivative(self, st):
        f = st.fields
        ring = self.ring(f["ring"])
        pr = ring.poly_ring(0)
        if f["var"] not in pr.names:
            raise CliError(f"{f['var']!r} is not a variable of the ring")
        g = self.parse_poly(ring, f["expr"]).derivative(
            pr.names.index(f["var"])
        )
        self.block(st, [self.expr_input(ring, f["expr"]),
                        self.describe(f["ring"])],
                   {"": ["derivative: " + pr.render(g)]})

    def exec_monomials(self, st):
        f = st.fields
        ring = self.ring(f["ring"])
        pr = ring.poly_ring(0)
        rows = [
            pr.render(pr.monomial(m))
            for m in pr.monomials_up_to_degree(f["degree"])
        ]
        self.block(st, [self.describe(f["ring"])],
                   {f"monomials up to degree {f['degree']}": rows})

    # -- driver -----------------------------------------------------------------

    def run(self, script) -> Report:
        for st in script.statements:
            handler = getattr(self, "exec_" + st.kind.replace("-", "_"))
            try:
                handler(st)
            except CliError as e:
                raise CliError(f"line {st.line}: {e}", e.code) from e
            except BudgetExceededError as e:
                raise CliError(f"line {st.line}: {e}", 3) from e
            except (ParseError, ValueError) as e:
                raise CliError(f"line {st.line}: {e}", 2) from e
        return self.report


class _Options:
    def __init__(self, max_degree=10, primes=(2, 3, 5), mode="scheme",
                 budget=None):
        self.max_degree = max_degree
        self.primes = tuple(primes)
        self.mode = mode
        self.budget = budget


def run_script(script, options=None) -> Report:
    """Execute a parsed script; raises :class:`CliError` on failures that are
    not mere check verdicts."""
    ex = _Executor(options or _Options())
    return ex.run(script)


def _parse_primes(text: str):
    try:
        primes = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("primes must be integers")
    if not primes:
        raise argparse.ArgumentTypeError("need at least one prime")
    return primes


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="quotrel",
        description="Run a quotrel script and print its report.",
    )
    ap.add_argument("script", help="script file, or - for stdin")
    ap.add_argument("--max-degree", type=int, default=10,
                    help="truncation degree for graded computations")
    ap.add_argument("--primes", type=_parse_primes, default=(2, 3, 5),
                    help="comma-separated primes for characteristic reruns")
    ap.add_argument("--mode", choices=("scheme", "set"), default="scheme",
                    help="equivalence-relation checking mode")
    ap.add_argument("--budget", type=int, default=None,
                    help="pair budget for basis computations")
    ap.add_argument("--format", choices=("text", "json"), default="text",
                    dest="format_", metavar="{text,json}",
                    help="report format")
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0

    try:
        if args.script == "-":
            text = sys.stdin.read()
        else:
            with open(args.script, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    options = _Options(max_degree=args.max_degree, primes=args.primes,
                       mode=args.mode, budget=args.budget)
    code = 0
    try:
        script = parse_script(text)
        report = run_script(script, options)
    except ScriptError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    code = max(code, report.status)
    out = report.render_json() if args.format_ == "json" else report.render_text()
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
