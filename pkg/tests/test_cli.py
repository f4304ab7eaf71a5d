import csv
import io
import json

import pytest

from cli import (
    InvalidArgumentsException,
    InvalidCommandException,
    Report,
    RunConfig,
    execute,
    flatten,
    normalize,
    parse_flags,
    parse_float,
    parse_int,
    verify_all,
)


def invoke(*argv):
    stream = io.StringIO()
    status = execute(list(argv), stream=stream)
    return status, stream.getvalue()


def invoke_json(*argv):
    status, text = invoke(*argv)
    assert status == 0
    return json.loads(text)


def csv_rows(text):
    reader = csv.reader(io.StringIO(text))
    assert next(reader) == ["path", "value"]
    return {path: value for path, value in reader}


@pytest.fixture(scope="module")
def suite():
    return verify_all()


def test_parse_flags_forms():
    flags = parse_flags(["--z", "42", "--classify", "--rule=fock-n", "--alpha", "-0.5"])
    assert flags == {"z": "42", "classify": None, "rule": "fock-n", "alpha": "-0.5"}


@pytest.mark.parametrize("tokens", [["42"], ["-z", "42"], ["--"], ["--z", "1", "--z", "2"]])
def test_parse_flags_rejects(tokens):
    with pytest.raises(InvalidArgumentsException):
        parse_flags(tokens)


def test_numbers_use_c_locale():
    assert parse_float("g", "0.5") == 0.5
    assert parse_float("g", "1e-3") == 1e-3
    assert parse_int("z", "+42") == 42
    for text in ("0,5", "1 000", "nan", "inf", ""):
        with pytest.raises(InvalidArgumentsException):
            parse_float("g", text)
    with pytest.raises(InvalidArgumentsException):
        parse_int("z", "4.0")


def test_run_config_defaults_and_names():
    config = RunConfig.build("dirac", {"n-r": "1"}, environ={})
    assert config.parameters == {"z": 1, "n_r": 1, "kappa": -1, "alpha": None}
    assert config.output_format == "json"


def test_run_config_lists():
    config = RunConfig.build("richardson", {"levels": "0,1.5", "g": "0.2", "pairs": "1"}, environ={})
    assert config.parameters["levels"] == [0.0, 1.5]
    assert config.parameters["degeneracies"] is None


@pytest.mark.parametrize(
    "command, flags",
    [
        ("aufbau", {}),
        ("aufbau", {"z": "42", "colour": "red"}),
        ("aufbau", {"z": "42", "classify": "yes"}),
        ("bdg", {"epsilon": "1", "delta": "1", "format": "xml"}),
        ("richardson", {"levels": "0,,1", "g": "0.1", "pairs": "1"}),
    ],
)
def test_run_config_rejects(command, flags):
    with pytest.raises(InvalidArgumentsException):
        RunConfig.build(command, flags, environ={})


def test_run_config_unknown_command():
    with pytest.raises(InvalidCommandException):
        RunConfig.build("plot", {}, environ={})


def test_environment_overrides_dataset_path(tmp_path):
    environ = {"MADELUNG_DATASET": str(tmp_path / "other.csv")}
    config = RunConfig.build("classify", {"dataset-path": "ignored.csv"}, environ=environ)
    assert config.dataset_path == str(tmp_path / "other.csv")
    assert RunConfig.build("bdg", {"epsilon": "1", "delta": "1"}, environ=environ).dataset_path is None


def test_normalize_rounds_and_maps():
    tree = normalize({"x": 0.1 + 0.2, "c": 1 + 2j, "bad": float("nan"), "t": (1, 2)})
    assert tree == {"x": 0.3, "c": {"real": 1.0, "imag": 2.0}, "bad": None, "t": [1, 2]}


def test_flatten_paths():
    rows = flatten({"b": [1, {"c": 2}], "a": [], "d": True})
    assert rows == [("a", None), ("b.0", 1), ("b.1.c", 2), ("d", True)]


def test_report_csv_cells():
    text = Report("bdg", {"flag": True}, {"none": None, "x": 0.5}).to_csv()
    rows = csv_rows(text)
    assert rows["inputs.flag"] == "true"
    assert rows["results.none"] == ""
    assert rows["results.x"] == "0.5"
    assert rows["warnings"] == ""


def test_aufbau_molybdenum():
    report = invoke_json("aufbau", "--rule", "madelung", "--z", "42")
    assert report["command"] == "aufbau"
    assert report["results"]["predicted"]["notation"] == "[Kr] 4d4 5s2"
    assert report["results"]["rule"] == "madelung"
    assert report["inputs"]["z"] == 42
    assert "classification" not in report["results"]


def test_aufbau_classify_diff():
    classification = invoke_json("aufbau", "--z", "42", "--classify")["results"]["classification"]
    assert classification["status"] == "exceptional"
    assert classification["experimental"] == "[Kr] 4d5 5s1"
    assert classification["diff"] == [
        {"orbital": "5s", "predicted": 2, "experimental": 1},
        {"orbital": "4d", "predicted": 4, "experimental": 5},
    ]


def test_aufbau_classify_warns_for_other_rules():
    report = invoke_json("aufbau", "--z", "19", "--rule", "hydrogenic-nl", "--classify")
    assert report["warnings"]
    assert report["results"]["predicted"]["notation"] == "[Ar] 3d1"


def test_classify_whole_table():
    results = invoke_json("classify")["results"]
    assert [e["z"] for e in results["elements"]] == list(range(1, 109))
    assert results["exceptional"] == sum(e["status"] == "exceptional" for e in results["elements"])
    assert results["metadata"]["range"] == [1, 108]


def test_classify_needs_dataset():
    status, text = invoke("classify", "--dataset-path", "")
    assert status == 1
    assert text == ""


def test_classify_missing_element():
    assert invoke("classify", "--z", "109")[0] == 1


def test_classify_corrupt_dataset(corrupt_dataset, capsys):
    status, _ = invoke("classify", "--dataset-path", str(corrupt_dataset))
    assert status == 1
    assert "43" in capsys.readouterr().err


def test_environment_dataset_is_used(monkeypatch, corrupt_dataset):
    monkeypatch.setenv("MADELUNG_DATASET", str(corrupt_dataset))
    assert invoke("classify", "--z", "1")[0] == 1


def test_spectrum_levels():
    results = invoke_json("spectrum", "--z", "1", "--n-max", "3")["results"]
    assert [level["orbital"] for level in results["levels"]] == ["1s", "2s", "2p", "3s", "3p", "3d"]
    assert results["levels"][0]["hydrogen_hartree"] == -0.5
    assert results["period_lengths"] == [2, 2, 8]


def test_spectrum_rejects_large_n_max():
    assert invoke("spectrum", "--n-max", "9")[0] == 1


def test_dirac_ground_state():
    results = invoke_json("dirac", "--z", "1")["results"]
    assert results["l"] == 0
    assert results["j"] == 0.5
    assert results["energy_rest_mass"] == pytest.approx(results["bisection_rest_mass"], rel=1e-12)
    assert results["radial_map"]["omega"] > 0


def test_dirac_without_relativity_warns():
    report = invoke_json("dirac", "--alpha", "0")
    assert report["results"]["radial_map"] is None
    assert report["results"]["binding_hartree"] == -0.5
    assert report["warnings"] == ["alpha = 0: no radial map"]


def test_dirac_invalid_kappa():
    assert invoke("dirac", "--kappa", "0")[0] == 1


def test_bdg_example():
    results = invoke_json("bdg", "--epsilon", "3", "--delta", "4")["results"]
    assert results["e_plus"] == 5.0
    assert results["e_minus"] == -5.0
    assert results["quasiparticle_energy"] == 5.0


def test_richardson_example():
    results = invoke_json(
        "richardson", "--levels", "0,1", "--degeneracies", "1,1", "--g", "0.5", "--pairs", "1"
    )["results"]
    assert results["total_energy"] == pytest.approx(-0.618034, abs=1e-6)
    assert results["exact"]["energy"] == pytest.approx(results["total_energy"], abs=1e-9)
    assert results["cooper_pair_energy"] == pytest.approx(results["total_energy"], abs=1e-9)
    assert results["pair_energies"][0]["imag"] == 0.0


def test_richardson_domain_error():
    assert invoke("richardson", "--levels", "0,1", "--g", "0.5", "--pairs", "3")[0] == 1


def test_swscan_marks_supercritical():
    report = invoke_json("swscan", "--alpha", "0.01", "--z-max", "120")
    margins = [point["margin"] for point in report["results"]["points"]]
    assert margins[98] is not None
    assert margins[99] is None
    assert report["warnings"] == ["supercritical for Z >= 100: margin undefined"]


def test_unknown_command_and_flag():
    assert invoke("plot")[0] == 1
    assert invoke("bdg", "--epsilon", "1", "--delta", "1", "--verbose")[0] == 1
    assert invoke()[0] == 1


def test_error_goes_to_stderr(capsys):
    status, text = invoke("bdg", "--epsilon", "1,5", "--delta", "1")
    assert status == 1
    assert text == ""
    assert "--epsilon" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["aufbau", "--z", "42", "--classify"],
        ["dirac", "--z", "80", "--n-r", "1", "--kappa", "2"],
        ["richardson", "--levels", "0,1,2", "--degeneracies", "2,1,1", "--g", "0.05", "--pairs", "2"],
        ["spectrum", "--z", "3"],
    ],
)
def test_csv_and_json_agree(argv):
    tree = invoke_json(*argv)
    status, text = invoke(*argv, "--format", "csv")
    assert status == 0
    rows = csv_rows(text)
    expected = flatten(tree)
    assert list(rows) == [path for path, _ in expected]
    for path, value in expected:
        cell = rows[path]
        if value is None:
            assert cell == ""
        elif isinstance(value, bool):
            assert cell == ("true" if value else "false")
        elif isinstance(value, float):
            assert float(cell) == value
        else:
            assert cell == str(value)


def test_output_is_deterministic():
    argv = ["richardson", "--levels", "0,0.7,1.9", "--g", "0.1", "--pairs", "2"]
    assert invoke(*argv) == invoke(*argv)


def test_verify_suite_passes(suite):
    failed = [(r.name, r.message) for r in suite if r.status != "pass"]
    assert failed == []
    names = [r.name for r in suite]
    assert len(names) == len(set(names))
    assert {name.split(".")[0] for name in names} == {"shells", "spectra", "fock", "pairing", "cli"}


def test_verify_covers_reports_and_pair_closure(suite):
    statuses = {r.name: r.status for r in suite}
    for name in (
        "cli.format_agreement",
        "cli.repeatable_output",
        "pairing.conjugation_closure",
        "pairing.quasiparticle_identity",
        "pairing.richardson_strong_coupling",
    ):
        assert statuses[name] == "pass"


def test_verify_is_deterministic(suite):
    assert [r.as_dict() for r in verify_all()] == [r.as_dict() for r in suite]


def test_verify_empty_dataset_path_skips():
    status, text = invoke("verify", "--dataset-path", "")
    report = json.loads(text)
    statuses = {p["name"]: p["status"] for p in report["results"]["properties"]}
    assert status == 0
    assert statuses["shells.classify_consistency"] == "skip"
    assert statuses["shells.classify_exemplars"] == "skip"
    assert report["results"]["summary"]["skip"] == 2
    assert report["results"]["summary"]["fail"] == 0
    assert len(report["warnings"]) == 2


def test_verify_corrupt_dataset_fails(corrupt_dataset):
    status, text = invoke("verify", "--dataset-path", str(corrupt_dataset))
    properties = {p["name"]: p for p in json.loads(text)["results"]["properties"]}
    assert status == 1
    for name in ("shells.classify_consistency", "shells.classify_exemplars"):
        assert properties[name]["status"] == "fail"
        assert "row 43" in properties[name]["message"]
    assert properties["shells.fill_electron_count"]["status"] == "pass"
