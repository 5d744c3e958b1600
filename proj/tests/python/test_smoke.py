import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import nsg

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = json.loads(pathlib.Path(os.environ.get("NSG_SCHEMA", ROOT / "schema" / "run_report.schema.json")).read_text())


def gens(*g):
    return nsg.NumericalSemigroup.from_generators(list(g))


def test_invariants():
    s = gens(5, 6, 7)
    assert s.multiplicity == 5
    assert s.frobenius == 9
    assert s.genus == 6
    assert s.gaps == [1, 2, 3, 4, 8, 9]
    assert s.apery == [0, 6, 7, 13, 14]
    assert s.generators == [5, 6, 7]
    assert 13 in s and 8 not in s
    assert nsg.NumericalSemigroup().is_naturals()
    assert str(nsg.H(4)) == "<4,5,6,7>"


def test_errors_carry_kind():
    with pytest.raises(nsg.Error) as info:
        gens(2, 4)
    assert info.value.kind == "NotCofinite"
    with pytest.raises(ValueError):
        nsg.NumericalSemigroup.from_gaps([2])


def test_classify_and_special_gaps():
    s = gens(5, 11, 13, 19)
    assert nsg.pseudo_frobenius(s) == [8, 14, 17]
    assert nsg.special_gaps(s) == [8, 14, 17]
    assert nsg.classify(s) == "reducible"
    assert nsg.classify(nsg.I(20)) == "pseudosymmetric"
    assert nsg.is_irreducible(nsg.T(21))


def test_spectra():
    lengths, witnesses = nsg.length_spectrum(gens(5, 21, 22, 33, 34))
    assert lengths == [2, 3, 4]
    for k, parts in witnesses.items():
        assert len(parts) == k
        assert nsg.is_decomposition(gens(5, 21, 22, 33, 34), parts)["verdict"] == "valid_irredundant"
    assert nsg.length_spectrum(gens(6, 16, 14, 19, 21, 23))[0] == [2, 3, 4, 5]


def test_ordinary_family():
    assert nsg.n_min(28) == 5
    assert sorted(nsg.d_family_lengths(28)) == list(range(5, 15))
    assert len(nsg.D(28, 0)) == 5
    assert len(nsg.minimum_decomposition(nsg.H(28))) == 4
    remark = [nsg.I(27), nsg.I(26), gens(7, 11, 12, 17), gens(9, 10, 13, 16, 17, 21)]
    assert nsg.is_decomposition(nsg.H(28), remark)["verdict"] == "valid_irredundant"


def test_constructions_and_sweep():
    assert nsg.m4_cover(nsg.H(4)) == gens(2, 5)
    t, t_prime, choice, _ = nsg.m6_covers(nsg.H(6))
    assert t == gens(3, 4) and t_prime == gens(3, 5, 7)
    assert choice["b1"] == 7
    count, bad, census = nsg.check_interval(6, 18, threads=2)
    assert count == 170 and bad == []
    assert all(set(k) != {3} for k in nsg.check_interval(4, 14)[2])


def test_budget():
    with pytest.raises(nsg.Error) as info:
        nsg.length_spectrum(nsg.H(12), budget=10)
    assert info.value.kind == "BudgetExceeded"


CLI_RUNS = [
    ["info", "5,11,13,19"],
    ["info", "gaps:"],
    ["lengths", "5,21,22,33,34"],
    ["decompose", "H:28", "I:27", "I:26", "7,11,12,17", "9,10,13,16,17,21"],
    ["decompose", "H:8"],
    ["ordinary", "28", "--ell", "4"],
    ["ordinary", "12", "--min", "--timing"],
    ["check", "5", "16", "--interval"],
    ["check", "4", "12", "--msbound"],
    ["verify-paper", "example-3.6"],
    ["info", "2,4"],
    ["lengths", "H:12", "--budget", "10"],
]


@pytest.mark.parametrize("args", CLI_RUNS, ids=lambda a: " ".join(a))
def test_cli_reports_validate(args):
    code, out, _ = nsg.run_cli(args + ["--json"])
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert code in (0, 2, 4)
    assert ("error" in report) == (code != 0)


@pytest.mark.skipif("NSG_CLI" not in os.environ, reason="command-line binary not given")
def test_binary_matches_in_process():
    args = ["lengths", "6,16,14,19,21,23", "--json"]
    proc = subprocess.run([os.environ["NSG_CLI"], *args], capture_output=True, text=True, check=True)
    assert proc.stdout == nsg.run_cli(args)[1]
    jsonschema.validate(json.loads(proc.stdout), SCHEMA)
