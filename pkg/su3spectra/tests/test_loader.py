# su3spectra/tests/test_loader.py
import pytest

from su3spectra.core.exceptions import DataFileError
from su3spectra.core.spectral.loader import TableLoader
from su3spectra.core.spectral.nimrep import EXCEPTIONAL_GRAPHS
from su3spectra.core.spectral.subgroups import EXCEPTIONAL_GROUPS

GROUP_ORDERS = {"E": 108, "F": 216, "G": 648, "H": 60, "I": 168, "J": 180, "K": 504, "L": 1080}


def test_shipped_graph_tables(table_loader):
    graphs = table_loader.load_graphs()
    assert set(graphs) == set(EXCEPTIONAL_GRAPHS)
    assert len(graphs["E8"].exponents) == 12
    for spectrum in graphs.values():
        assert spectrum.total_weight == pytest.approx(1.0)


def test_shipped_group_tables(table_loader):
    groups = table_loader.load_groups()
    assert set(groups) == set(EXCEPTIONAL_GROUPS)
    for name, spec in groups.items():
        assert spec.order == GROUP_ORDERS[name]
        assert spec.class_total == spec.order
    assert len(groups["G"].classes) == 24


def test_counted_rows_expand_to_labelled_classes(table_loader):
    labels = [c.label for c in table_loader.get_group("E").classes]
    assert "one_1" in labels and "one_2" in labels
    assert len(labels) == len(set(labels))


def test_loader_caches_tables(table_loader):
    assert table_loader.load_graphs() is table_loader.load_graphs()
    assert table_loader.get_graph("E99") is None


def _write(tmp_path, name, text):
    (tmp_path / name).write_text(text, encoding="utf-8")
    return TableLoader(tmp_path)


def test_missing_file(tmp_path):
    with pytest.raises(DataFileError):
        TableLoader(tmp_path).load_graphs()


def test_weights_must_sum_to_one(tmp_path):
    loader = _write(
        tmp_path,
        "graphs.yaml",
        "graphs:\n  X:\n    n: 5\n    exponents:\n"
        "      - {lambda: [0, 0], weight: '1/2'}\n"
        "      - {lambda: [1, 1], weight: '1/3'}\n",
    )
    with pytest.raises(DataFileError, match="sum to"):
        loader.load_graphs()


def test_exponent_outside_the_triangle(tmp_path):
    loader = _write(
        tmp_path,
        "graphs.yaml",
        "graphs:\n  X:\n    n: 5\n    exponents:\n"
        "      - {lambda: [0, 0], weight: '1/2'}\n"
        "      - {lambda: [3, 0], weight: '1/2'}\n",
    )
    with pytest.raises(DataFileError, match="triangle"):
        loader.load_graphs()


def test_unparseable_weight(tmp_path):
    loader = _write(
        tmp_path,
        "graphs.yaml",
        "graphs:\n  X:\n    n: 5\n    exponents:\n      - {lambda: [0, 0], weight: 'one half'}\n",
    )
    with pytest.raises(DataFileError):
        loader.load_graphs()


def test_class_equation_is_enforced(tmp_path):
    loader = _write(
        tmp_path,
        "groups.yaml",
        "groups:\n  X:\n    order: 4\n    classes:\n"
        "      - {label: '1', size: 1, rep: ['0', '0']}\n"
        "      - {label: 'a', size: 2, rep: ['1/2', '1/2']}\n",
    )
    with pytest.raises(DataFileError):
        loader.load_groups()


def test_character_norm_must_be_a_positive_integer(tmp_path):
    loader = _write(
        tmp_path,
        "groups.yaml",
        "groups:\n  X:\n    order: 2\n    classes:\n"
        "      - {label: '1', size: 1, rep: ['0', '0']}\n"
        "      - {label: 'a', size: 1, rep: ['1/3', '0']}\n",
    )
    with pytest.raises(DataFileError, match="Character norm"):
        loader.load_groups()


def test_scalar_z3_table_is_accepted(tmp_path):
    loader = _write(
        tmp_path,
        "groups.yaml",
        "groups:\n  Z:\n    order: 3\n    classes:\n"
        "      - {label: '1', size: 1, rep: ['0', '0']}\n"
        "      - {label: 'w', size: 1, rep: ['1/3', '2/3']}\n"
        "      - {label: 'wb', size: 1, rep: ['2/3', '1/3']}\n",
    )
    assert loader.get_group("Z").character_norm() == pytest.approx(9.0)


def test_duplicated_labels(tmp_path):
    loader = _write(
        tmp_path,
        "groups.yaml",
        "groups:\n  X:\n    order: 2\n    classes:\n"
        "      - {label: '1', size: 1, rep: ['0', '0']}\n"
        "      - {label: '1', size: 1, rep: ['1/2', '1/2']}\n",
    )
    with pytest.raises(DataFileError, match="Duplicated"):
        loader.load_groups()


def test_schema_violation(tmp_path):
    loader = _write(tmp_path, "groups.yaml", "groups:\n  X:\n    order: 0\n    classes: []\n")
    with pytest.raises(DataFileError, match="malformed"):
        loader.load_groups()
