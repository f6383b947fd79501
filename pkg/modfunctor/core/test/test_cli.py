import json

import numpy as np
import pytest
from click.testing import CliRunner

from modfunctor.core.modfunctor import modfunctor
from .factories import (
    ALL_TAU,
    fibonacci_theory,
    perturbed_f,
    relabeled,
    theory,
    trivial_theory,
)

QUIET = {"MODFUNCTOR_VERBOSE": "false", "MODFUNCTOR_JOBS": "1"}


def run(*args, input=None):
    return CliRunner().invoke(modfunctor, list(args), input=input, env=QUIET)


def write(tmpdir, bd, name="theory.json"):
    path = str(tmpdir.join(name))
    bd.save(path)
    return path


@pytest.mark.parametrize("name", ["trivial", "fibonacci", "abelian-2"])
def test_generated_documents_validate(tmpdir, name):
    generated = run("generate", name)
    assert generated.exit_code == 0
    path = tmpdir.join(f"{name}.json")
    path.write(generated.stdout)
    result = run("validate", str(path))
    assert result.exit_code == 0
    assert result.output.rstrip().endswith("0 failed")


def test_generate_to_file(tmpdir):
    path = str(tmpdir.join("trivial.json"))
    assert run("generate", "trivial", "--output", path).exit_code == 0
    with open(path) as fh:
        document = json.load(fh)
    assert document["labels"] == ["0"]


def test_generate_unknown_theory():
    result = run("generate", "ising")
    assert result.exit_code == 3


def test_corrupted_document_names_the_failing_relation(tmpdir):
    key = ("tau", "tau", "tau", "tau", "0", "tau")
    path = write(tmpdir, perturbed_f(fibonacci_theory(), key))
    result = run("validate", path)
    assert result.exit_code == 1
    assert "FAIL" in result.output
    assert any(line.split("\t")[0] in ("pentagon", "abba")
               for line in result.output.splitlines() if line.endswith("FAIL"))


def test_malformed_document(tmpdir):
    path = tmpdir.join("broken.json")
    path.write('{"labels": [\n')
    result = run("validate", str(path))
    assert result.exit_code == 2


def test_machine_output_has_no_summary(tmpdir):
    result = run("validate", write(tmpdir, trivial_theory()), "--machine")
    assert result.exit_code == 0
    assert all(len(line.split("\t")) == 4 for line in result.output.splitlines())


def test_relations_include_torus_checks(tmpdir):
    result = run("relations", write(tmpdir, fibonacci_theory()), "--machine")
    assert result.exit_code == 0
    relations = {line.split("\t")[0] for line in result.output.splitlines()}
    assert {"pentagon", "route_equivalence", "mcg", "cerne"} <= relations


def test_relations_catch_the_all_tau_corner(tmpdir):
    path = write(tmpdir, perturbed_f(fibonacci_theory(), ALL_TAU))
    assert run("relations", path).exit_code == 1


def test_proof_reading_fails(tmpdir):
    result = run("relations", write(tmpdir, fibonacci_theory()), "--reading", "proof")
    assert result.exit_code == 1


def test_s_matrix_of_trivial_theory(tmpdir):
    result = run("s-matrix", write(tmpdir, trivial_theory()))
    assert result.exit_code == 0
    assert "[1]" in result.output.splitlines()


def test_s_matrix_fragment(tmpdir):
    bd = fibonacci_theory()
    result = run("s-matrix", write(tmpdir, bd), "--machine", "--variant", "sandwich")
    assert result.exit_code == 0
    fragment = json.loads(result.stdout)
    assert fragment["route"] == "sandwich"
    matrix = np.array([[complex(*z) for z in row] for row in fragment["S"]])
    assert np.allclose(matrix, bd.s, atol=1e-9)
    assert fragment["provenance"]["method"] == "s_matrix"
    assert all(report["passed"] for report in fragment["reports"])


def test_s_matrix_without_s(tmpdir):
    result = run("s-matrix", write(tmpdir, fibonacci_theory().without_s()), "--machine")
    assert result.exit_code == 0
    fragment = json.loads(result.stdout)
    assert [report["relation"] for report in fragment["reports"]] == ["route_equivalence", "mcg"]


def test_s_matrix_at_tau(tmpdir):
    result = run("s-matrix", write(tmpdir, fibonacci_theory()), "--label", "tau")
    assert result.exit_code == 0


def test_s_matrix_jobs_do_not_change_the_result(tmpdir):
    path = write(tmpdir, fibonacci_theory())
    serial = run("s-matrix", path, "--label", "tau", "--jobs", "1")
    parallel = run("s-matrix", path, "--label", "tau", "--jobs", "2")
    assert serial.exit_code == parallel.exit_code == 0
    assert serial.stdout == parallel.stdout


def test_unit_last_document_validates(tmpdir):
    bd = relabeled(fibonacci_theory(), ["tau", "0"])
    path = write(tmpdir, bd)
    assert run("validate", path).exit_code == 0
    assert run("relations", path).exit_code == 0
    assert run("s-matrix", path).exit_code == 0


def test_s_matrix_unknown_label(tmpdir):
    result = run("s-matrix", write(tmpdir, fibonacci_theory()), "--label", "sigma")
    assert result.exit_code == 2


@pytest.mark.parametrize("args, expected", [
    (["--genus", "2"], "5"),
    (["--genus", "1"], "2"),
    (["--genus", "0", "--boundary", "tau"], "0"),
    (["--genus", "0", "--boundary", "0"], "1"),
    (["--genus", "2", "--tree", "comb"], "5"),
])
def test_dims(tmpdir, args, expected):
    result = run("dims", write(tmpdir, fibonacci_theory()), *args)
    assert result.exit_code == 0
    assert result.output.strip() == expected


def test_dims_abelian_torus(tmpdir):
    result = run("dims", write(tmpdir, theory("abelian-3")), "--genus", "1")
    assert result.output.strip() == "3"


def test_version():
    result = run("version")
    assert result.exit_code == 0
    assert result.output.strip()
