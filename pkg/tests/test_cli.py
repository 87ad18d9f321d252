import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from grassmult.cli import (
    EXIT_BUDGET,
    EXIT_MISMATCH,
    EXIT_NOT_ON_VARIETY,
    EXIT_PARSE,
    InstanceSpec,
    ResultDocument,
    cmd_hilbert,
    cmd_mult,
    cmd_verify,
    main,
)

QUAD = ["--n", "4", "--d", "2", "--w", "2,4", "--tau", "1,2"]
FIG1 = ["--n", "21", "--d", "9", "--w", "4,6,7,13,14,17,19,20,21", "--tau", "1,2,4,7,10,12,13,15,16"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("method", ["determinant", "paths", "reflections"])
def test_mult_quadric(capsys, method):
    code, out, _ = run(capsys, "mult", *QUAD, "--method", method)
    assert code == 0
    doc = json.loads(out)
    assert doc["multiplicity"] == "2" and doc["method"] == method


def test_mult_fig1_echoes_kappa(capsys):
    code, out, _ = run(capsys, "mult", *FIG1)
    doc = json.loads(out)
    assert code == 0
    assert doc["kappa"] == ["6", "6", "5", "2", "2", "0", "0", "0", "0"]
    assert "".join(doc["sigma"]) == "674583129"
    assert all(isinstance(x, str) for x in doc["w"])


def test_exit_codes(capsys):
    assert run(capsys, "mult", "--n", "4", "--d", "2", "--w", "2,4", "--tau", "3,4")[0] == EXIT_NOT_ON_VARIETY
    assert run(capsys, "mult", "--n", "4", "--d", "2", "--w", "2,q", "--tau", "1,2")[0] == EXIT_PARSE
    assert run(capsys, "mult", "--n", "4", "--d", "2", "--w", "4,2", "--tau", "1,2")[0] == EXIT_PARSE
    assert run(capsys, "mult", "--n", "4")[0] == EXIT_PARSE
    code, out, err = run(capsys, "mult", *FIG1, "--method", "reflections")
    assert code == EXIT_BUDGET and out == "" and "budget" in err


def test_budget_flag(capsys):
    assert run(capsys, "mult", *QUAD, "--method", "reflections", "--budget", "8")[0] == EXIT_BUDGET
    assert run(capsys, "mult", *QUAD, "--method", "reflections", "--budget", "16")[0] == 0


def test_hilbert_quadric(capsys):
    code, out, _ = run(capsys, "hilbert", *QUAD, "--expand", "3")
    doc = json.loads(out)
    assert code == 0
    assert doc["numerator"] == ["1", "1"] and doc["pole_order"] == "3"
    assert doc["expansion"] == ["1", "4", "9", "16"]
    assert doc["conjectural"] is True


def test_hilbert_other_examples():
    doc = cmd_hilbert(InstanceSpec.parse(5, 2, "2,5", "2,5"))
    assert doc.numerator == (1,)
    doc = cmd_hilbert(InstanceSpec.parse(5, 2, "3,5", "1,2"))
    assert doc.numerator == (1, 1) and doc.pole_order == 5


def test_multiplicity_carries_no_conjectural_flag():
    assert cmd_mult(InstanceSpec.parse(4, 2, "2,4", "1,2")).conjectural is None


def test_list_families(capsys):
    code, out, _ = run(capsys, "mult", *QUAD, "--list-families")
    doc = json.loads(out)
    assert doc["families"] == [{"steps": ["", "NNE"], "en_turns": "0"}, {"steps": ["", "NEN"], "en_turns": "1"}]
    code, out, _ = run(capsys, "paths", *QUAD, "--format", "text")
    assert code == 0 and "family 2: - NEN  EN=1" in out


def test_deterministic_output(capsys):
    docs = []
    for _ in range(2):
        _, out, _ = run(capsys, "hilbert", *QUAD, "--list-families", "--expand", "2")
        d = json.loads(out)
        d.pop("elapsed_seconds")
        docs.append(d)
    assert docs[0] == docs[1]


def test_round_trip_documents():
    for doc in [
        cmd_mult(InstanceSpec.parse(4, 2, "2,4", "1,2"), list_families=True),
        cmd_hilbert(InstanceSpec.parse(21, 9, "4,6,7,13,14,17,19,20,21", "1,2,4,7,10,12,13,15,16"), expand=4),
        cmd_mult(InstanceSpec.parse(3, 0, "", "")),
    ]:
        assert ResultDocument.from_json(doc.to_json()) == doc


@given(st.integers(0, 10**40), st.lists(st.integers(0, 10**30), max_size=5))
def test_round_trip_big_integers(mult, coeffs):
    doc = ResultDocument("mult", 4, 2, (2, 4), (1, 2), (0, 0), (1, 2), method="determinant",
                         multiplicity=mult, numerator=tuple(coeffs), elapsed_seconds=0.25)
    assert ResultDocument.from_json(doc.to_json()) == doc


def test_verify_small(capsys):
    assert cmd_verify(0) == {"command": "verify", "max_n": "0", "instances": "0", "ok": True}
    code, out, _ = run(capsys, "verify", "--max-n", "4")
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_ceiling(capsys):
    assert run(capsys, "verify", "--max-n", "99")[0] == EXIT_BUDGET


def test_verify_reports_mismatch(capsys, monkeypatch):
    import grassmult.verify as v

    monkeypatch.setattr(v, "check_round_trip", lambda inst: ["boom"] if inst.n == 3 else [])
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--format", "text")
    assert code == EXIT_MISMATCH
    assert "first failure: n=3 d=0" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "grassmult", "mult", *QUAD, "--format", "text"],
                          capture_output=True, text=True, check=True)
    assert "multiplicity [determinant]: 2" in proc.stdout
