"""End-to-end runs of the command-line front end.

Each test writes a script to a temp file, invokes ``main`` in-process and
checks the rendered report and exit code.  One test goes through the
installed ``quotrel`` console script to make sure the packaging glue works.
"""

import io
import json
import shutil
import subprocess

import pytest

from quotrel.cli import main

SMOKE = (
    "ring R = QQ[x,y];\n"
    "ideal I = (x^2 - y^2) in R;\n"
    "check I member x+y;\n"
)

SMOKE_GOLDEN = (
    "$ check I member x+y\n"
    "inputs: I (ideal in R), x+y (inline)\n"
    "verdict: not-member\n"
)

# Involution on the plane: the four-generator relation is not transitive as
# a scheme, dropping the mixed generator repairs it.
INVOLUTION = """
ring D = QQ[x1, y1, x2, y2];
ideal DIAG = (x1 - x2, y1 - y2) in D;
ideal ANTI = (x1 + x2, y1 + y2) in D;
intersect DIAG ANTI;
ring X = QQ[x, y];
relation R on X = (x1^2 - x2^2, y1^2 - y2^2, x1*y1 - x2*y2, x1*y2 - x2*y1);
verify-relation R;
relation RSTAR on X = (x1^2 - x2^2, y1^2 - y2^2, x1*y1 - x2*y2);
verify-relation RSTAR;
"""

INVOLUTION_GOLDEN = (
    "$ intersect DIAG ANTI\n"
    "inputs: DIAG (ideal in D), ANTI (ideal in D)\n"
    "intersection basis:\n"
    "y1*x2 - x1*y2\n"
    "y1^2 - y2^2\n"
    "x1*y1 - x2*y2\n"
    "x1^2 - x2^2\n"
    "\n"
    "$ verify-relation R\n"
    "inputs: R (relation on X (explicit)), mode=scheme\n"
    "equivalence-relation check (mode=scheme)\n"
    "  reflexivity:  pass\n"
    "  symmetry:     pass\n"
    "  transitivity: FAIL   witness: -y1*x3 + x1*y3\n"
    "  finiteness:   pass\n"
    "verdict: fail\n"
    "\n"
    "$ verify-relation RSTAR\n"
    "inputs: RSTAR (relation on X (explicit)), mode=scheme\n"
    "equivalence-relation check (mode=scheme)\n"
    "  reflexivity:  pass\n"
    "  symmetry:     pass\n"
    "  transitivity: pass\n"
    "  finiteness:   pass\n"
    "verdict: pass\n"
)

COCYCLE = """
ring A = QQ[x1, x2];
cocycle F on A = maps (x1^2, x1*x2 - x2^2, x2^3) poly (x1*y2 - x2*y1)*y2^3;
check-cocycle F;
effectivity F;
"""

SLOW_GROEBNER = """
ring R = QQ[x,y,z];
ideal I = (x^5 + y^4 + z^3 - 1, x^3 + y^3 + z^2 - 1, x^2*y^2*z);
groebner I;
"""


def run(tmp_path, capsys, text, *args):
    path = tmp_path / "script.qs"
    path.write_text(text)
    code = main([str(path), *args])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_passing_check_exits_zero(tmp_path, capsys):
    script = SMOKE.replace("member x+y", "member x^2 - y^2")
    code, out, err = run(tmp_path, capsys, script)
    assert code == 0
    assert "verdict: member" in out
    assert err == ""


def test_failing_check_golden_text(tmp_path, capsys):
    code, out, err = run(tmp_path, capsys, SMOKE)
    assert code == 1
    assert out == SMOKE_GOLDEN
    assert err == ""


def test_involution_script_golden_text(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, INVOLUTION)
    assert code == 1
    assert out == INVOLUTION_GOLDEN


def test_set_mode_rescues_transitivity(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, INVOLUTION, "--mode", "set")
    assert code == 0
    assert "mode=set" in out
    assert "FAIL" not in out


def test_json_document_shape(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, SMOKE, "--format", "json")
    assert code == 1
    doc = json.loads(out)
    assert doc["version"] == 1
    assert doc["status"] == 1
    (result,) = doc["results"]
    assert result == {
        "command": "check I member x+y",
        "inputs": ["I (ideal in R)", "x+y (inline)"],
        "tables": {},
        "verdict": "not-member",
        "witnesses": [],
    }
    # keys come out sorted so the document is diff-stable
    assert list(doc) == ["results", "status", "version"]


def test_output_is_deterministic(tmp_path, capsys):
    runs = [run(tmp_path, capsys, INVOLUTION) for _ in range(2)]
    assert runs[0] == runs[1]
    json_runs = [
        run(tmp_path, capsys, INVOLUTION, "--format", "json") for _ in range(2)
    ]
    assert json_runs[0] == json_runs[1]


def test_parse_error_exits_two(tmp_path, capsys):
    code, out, err = run(tmp_path, capsys, "ring R = QQ[x,y];\nideal I = (x^2;\n")
    assert code == 2
    assert out == ""
    assert err.startswith("error: line 2")


def test_missing_file_exits_two(capsys):
    code = main(["/no/such/place/script.qs"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.err.startswith("error:")


def test_unknown_flag_exits_two(tmp_path, capsys):
    path = tmp_path / "script.qs"
    path.write_text(SMOKE)
    assert main([str(path), "--frobnicate"]) == 2


def test_budget_flag_exits_three(tmp_path, capsys):
    code, out, err = run(tmp_path, capsys, SLOW_GROEBNER, "--budget", "3")
    assert code == 3
    assert "exceeded budget" in err
    # the same script finishes under the default (unlimited) budget
    code, out, err = run(tmp_path, capsys, SLOW_GROEBNER)
    assert code == 0
    assert "reduced basis:" in out


def test_reads_script_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(SMOKE))
    code = main(["-"])
    captured = capsys.readouterr()
    assert code == 1
    assert captured.out == SMOKE_GOLDEN


def test_max_degree_bounds_kernel_basis(tmp_path, capsys):
    script = (
        "ring X = QQ[x, y];\n"
        "relation RM on X = from-map (x^2, x*y, y^2);\n"
        "kernel-basis RM;\n"
    )
    _, shallow, _ = run(tmp_path, capsys, script, "--max-degree", "3")
    _, deep, _ = run(tmp_path, capsys, script, "--max-degree", "4")
    assert "degree bound 3" in shallow
    assert "degree bound 4" in deep
    assert "dimensions by degree: [1, 1, 4, 4]" in shallow
    assert shallow != deep


def test_primes_flag_limits_effectivity_fields(tmp_path, capsys):
    _, out, _ = run(tmp_path, capsys, COCYCLE, "--primes", "2")
    assert "primes 2" in out
    assert "over FF(2):" in out
    assert "FF(5)" not in out
    _, full, _ = run(tmp_path, capsys, COCYCLE)
    assert "over FF(5):" in full


def test_noneffective_verdict_is_not_a_failure(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, COCYCLE)
    assert code == 0
    assert "verdict: cocycle" in out
    assert "verdict: noneffective" in out


def test_twist_over_prime_field_is_verbatim(tmp_path, capsys):
    script = "ring F2 = FF(2)[s];\npoly g = s^3 + s in F2;\ntwist 2 g in F2;\n"
    code, out, _ = run(tmp_path, capsys, script)
    assert code == 0
    assert out == (
        "$ twist 2 g in F2\n"
        "inputs: g (element of F2), F2 (ring FF(2)[s])\n"
        "twist: s^3 + s\n"
    )


def test_pushout_diagram_failure_witness(tmp_path, capsys):
    script = """
ring X = QQ[x, y];
algebra B1 = (x, y^2, y^3) in X;
algebra B2 = (x + y, x + x^2, y^2, y^3) in X;
algebra COR = (x + x^2, x*y^2, x*y^3, y^2, y^3) in X;
verify-pushout diagram B1 B2 COR;
"""
    code, out, _ = run(tmp_path, capsys, script, "--max-degree", "5")
    assert code == 1
    assert "verdict: not-push-out" in out
    assert "witness: x^3 - 3/4*x" in out


def test_map_evaluation(tmp_path, capsys):
    script = (
        "ring L = QQ[t];\n"
        "map SQ : L -> L = (t^2);\n"
        "evaluate SQ t^2 + 1;\n"
    )
    code, out, _ = run(tmp_path, capsys, script)
    assert code == 0
    assert "t^4 + 1" in out


@pytest.mark.skipif(shutil.which("quotrel") is None, reason="not installed")
def test_console_script(tmp_path):
    path = tmp_path / "script.qs"
    path.write_text(SMOKE)
    proc = subprocess.run(
        ["quotrel", str(path)], capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == 1
    assert proc.stdout == SMOKE_GOLDEN
