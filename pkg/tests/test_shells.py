import pytest

from errors import DomainError
from shells import (
    ALL_ORBITALS,
    MAX_Z,
    Configuration,
    ConfigurationParseError,
    DatasetError,
    ElementNotFoundError,
    FillingRule,
    Orbital,
    Status,
    classify,
    classify_all,
    dataset_metadata,
    fill,
    filling_order,
    format_configuration,
    load_elements,
    madelung_key,
    noble_core,
    parse_configuration,
    period_lengths,
    period_orbitals,
    strip_orbital,
)


def test_orbital_capacity_and_label():
    d = Orbital(4, 2)
    assert d.capacity == 10
    assert d.label == "4d"
    assert Orbital.from_label("5f") == Orbital(5, 3)


@pytest.mark.parametrize("n, l", [(0, 0), (2, 2), (3, -1)])
def test_orbital_rejects_bad_quantum_numbers(n, l):
    with pytest.raises(DomainError):
        Orbital(n, l)


def test_madelung_key_examples():
    assert madelung_key(Orbital(4, 2)) == (6, 4)
    assert madelung_key(Orbital(4, 2)) > madelung_key(Orbital(5, 0))


def test_madelung_order_begins_as_expected():
    labels = [o.label for o in filling_order(FillingRule.MADELUNG, 10)]
    assert labels == ["1s", "2s", "2p", "3s", "3p", "4s", "3d", "4p", "5s", "4d"]


def test_madelung_order_is_strict_and_total():
    for a in ALL_ORBITALS:
        for b in ALL_ORBITALS:
            if a == b:
                assert not a < b
            else:
                assert (a < b) != (b < a)


def test_fock_and_hydrogenic_orders_agree():
    count = len(ALL_ORBITALS)
    assert filling_order(FillingRule.FOCK_N, count) == filling_order(FillingRule.HYDROGENIC_NL, count)


def test_filling_order_rejects_zero_count():
    with pytest.raises(DomainError):
        filling_order(FillingRule.MADELUNG, 0)


@pytest.mark.parametrize("text", ["madelung", "fock-n", "hydrogenic-nl"])
def test_filling_rule_parse(text):
    assert FillingRule.parse(text).value == text


def test_filling_rule_parse_unknown():
    with pytest.raises(DomainError):
        FillingRule.parse("klechkowski")


def test_period_lengths_double():
    assert period_lengths(FillingRule.MADELUNG, 8) == [2, 2, 8, 8, 18, 18, 32, 32]


def test_period_lengths_needs_madelung():
    with pytest.raises(DomainError):
        period_lengths(FillingRule.HYDROGENIC_NL, 4)


def test_period_orbitals():
    assert [o.label for o in period_orbitals(6)] == ["4d", "5p", "6s"]


@pytest.mark.parametrize("rule", list(FillingRule))
def test_fill_has_z_electrons(rule):
    for z in range(1, MAX_Z + 1):
        c = fill(rule, z)
        assert c.z == z
        assert all(count <= o.capacity for o, count in c.occupations)


@pytest.mark.parametrize("rule", list(FillingRule))
def test_fill_adds_one_electron_at_a_time(rule):
    for z in range(1, MAX_Z):
        before, after = fill(rule, z).as_dict(), fill(rule, z + 1).as_dict()
        steps = [after.get(o, 0) - before.get(o, 0) for o in set(before) | set(after)]
        assert sorted(s for s in steps if s) == [1]


@pytest.mark.parametrize("z", [0, 119])
def test_fill_rejects_out_of_range(z):
    with pytest.raises(DomainError):
        fill(FillingRule.MADELUNG, z)


def test_fill_molybdenum():
    c = fill(FillingRule.MADELUNG, 42)
    assert format_configuration(c, core="Kr") == "[Kr] 4d4 5s2"
    assert format_configuration(c, core="Kr", order="madelung") == "[Kr] 5s2 4d4"


def test_hydrogenic_rule_differs_from_madelung_for_potassium():
    c = fill(FillingRule.HYDROGENIC_NL, 19)
    assert c[Orbital(3, 2)] == 1
    assert c[Orbital(4, 0)] == 0


def test_parse_configuration_with_core():
    c = parse_configuration("[Kr] 4d5 5s1")
    assert c.z == 42
    assert c[Orbital(4, 2)] == 5
    assert c[Orbital(4, 1)] == 6


def test_parse_configuration_explicit():
    assert parse_configuration("1s2 2s2 2p3") == fill(FillingRule.MADELUNG, 7)


@pytest.mark.parametrize(
    "text, position",
    [
        ("[Kr] 4d11", 5),
        ("1s2 2x1", 4),
        ("1s2 [He]", 4),
        ("[Zz] 1s1", 0),
        ("1s2 1s1", 4),
    ],
)
def test_parse_configuration_errors_carry_position(text, position):
    with pytest.raises(ConfigurationParseError) as error:
        parse_configuration(text)
    assert error.value.position == position
    assert f"position {position}" in str(error.value)


def test_parse_configuration_empty():
    with pytest.raises(ConfigurationParseError):
        parse_configuration("   ")


def test_format_rejects_foreign_core():
    with pytest.raises(DomainError):
        format_configuration(parse_configuration("1s2 2s1"), core="Ne")


def test_format_rejects_unknown_order():
    with pytest.raises(DomainError):
        format_configuration(parse_configuration("1s1"), order="alphabetical")


def test_roundtrip_random_configurations(rng):
    for _ in range(300):
        picked = rng.choice(len(ALL_ORBITALS), size=int(rng.integers(1, 8)), replace=False)
        counts = {}
        for index in picked:
            orbital = ALL_ORBITALS[int(index)]
            counts[orbital] = int(rng.integers(1, orbital.capacity + 1))
        c = Configuration.from_counts(counts)
        assert parse_configuration(format_configuration(c)) == c
        assert parse_configuration(format_configuration(c, core=noble_core(c))) == c


@pytest.mark.parametrize("z, core", [(1, None), (2, None), (3, "He"), (18, "Ne"), (42, "Kr"), (118, "Rn")])
def test_noble_core(z, core):
    assert noble_core(fill(FillingRule.MADELUNG, z)) == core


def test_configuration_validation():
    with pytest.raises(DomainError):
        Configuration(((Orbital(1, 0), 3),))
    with pytest.raises(DomainError):
        Configuration(((Orbital(1, 0), 1), (Orbital(1, 0), 1)))
    assert Configuration.from_counts({Orbital(1, 0): 1, Orbital(2, 0): 0}).z == 1


def test_strip_orbital_relates_mo_to_rb():
    mo = parse_configuration("[Kr] 4d5 5s1")
    assert strip_orbital(mo, Orbital(4, 2)) == parse_configuration("[Kr] 5s1")


def test_strip_orbital_relates_cr_to_k():
    cr = parse_configuration("[Ar] 3d5 4s1")
    assert strip_orbital(cr, Orbital(3, 2)) == parse_configuration("[Ar] 4s1")


def test_strip_absent_orbital():
    with pytest.raises(DomainError):
        strip_orbital(parse_configuration("1s2"), Orbital(2, 0))


def test_dataset_loads(dataset):
    assert [r.z for r in dataset] == list(range(1, 109))
    assert dataset[41].symbol == "Mo"


def test_dataset_metadata():
    meta = dataset_metadata()
    assert meta["file"] == "elements.csv"
    assert meta["range"] == [1, 108]


def test_metadata_missing_is_empty(tmp_path):
    path = tmp_path / "other.csv"
    path.write_text("z,symbol,configuration\n1,H,1s1\n", encoding="utf-8")
    assert dataset_metadata(path) == {}
    assert load_elements(path)[0].symbol == "H"


def test_corrupt_dataset_names_the_row(corrupt_dataset):
    with pytest.raises(DatasetError) as error:
        load_elements(corrupt_dataset)
    assert error.value.row == 43
    assert "Mo" in str(error.value)


@pytest.mark.parametrize(
    "body, row",
    [
        ("1,H,1s2\n", 2),
        ("1,H,1s1\n1,H,1s1\n", 3),
        ("x,H,1s1\n", 2),
        ("1,H\n", 2),
    ],
)
def test_dataset_row_errors(tmp_path, body, row):
    path = tmp_path / "bad.csv"
    path.write_text("z,symbol,configuration\n" + body, encoding="utf-8")
    with pytest.raises(DatasetError) as error:
        load_elements(path)
    assert error.value.row == row


def test_dataset_bad_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("Z,element,config\n1,H,1s1\n", encoding="utf-8")
    with pytest.raises(DatasetError):
        load_elements(path)


@pytest.mark.parametrize("z", [24, 29, 41, 42, 44, 45, 46, 57, 90])
def test_exemplars_are_exceptional(dataset, z):
    assert classify(z, dataset).status is Status.EXCEPTIONAL


@pytest.mark.parametrize("z", [1, 7, 26, 36])
def test_regular_elements(dataset, z):
    result = classify(z, dataset)
    assert result.status is Status.REGULAR
    assert result.diff == ()


def test_molybdenum_diff(dataset):
    diff = [(str(d.orbital), d.predicted, d.experimental) for d in classify(42, dataset).diff]
    assert diff == [("5s", 2, 1), ("4d", 4, 5)]


def test_classify_missing_element(dataset):
    with pytest.raises(ElementNotFoundError):
        classify(109, dataset)


def test_regular_means_prediction_matches(dataset):
    records = {r.z: r for r in dataset}
    for z, symbol, result in classify_all(dataset):
        equal = fill(FillingRule.MADELUNG, z) == records[z].experimental
        assert equal == (result.status is Status.REGULAR)
        assert symbol == records[z].symbol


def test_lanthanum_discrepancy_is_documented(dataset):
    lanthanum = dataset[56]
    assert lanthanum.experimental == parse_configuration("[Xe] 5d1 6s2")
    assert parse_configuration("[Xe] 4f1 5d1 6s2").z == 58
    notes = dataset_metadata()["notes"]
    assert [note["symbol"] for note in notes if note["z"] == 57] == ["La"]
