import json
from decimal import Decimal

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from nekbound import NotSquare, ParseError, UnknownName, UnsupportedFormat, best_bound, classify
from nekbound.io import (
    BUILTIN_NAMES,
    Provenance,
    builtin,
    fmt4,
    load_matrix,
    parse_csv,
    parse_matrix_market,
    report_dict,
    round4,
    write_matrix_market,
)


def test_coordinate():
    text = "%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 2\n1 2 1\n2 2 3\n"
    np.testing.assert_array_equal(parse_matrix_market(text), [[2, 1], [0, 3]])


def test_array_is_column_major():
    text = "%%MatrixMarket matrix array real general\n2 2\n1\n3\n2\n4\n"
    np.testing.assert_array_equal(parse_matrix_market(text), [[1, 2], [3, 4]])


def test_complex_integer_and_comments():
    text = (
        "%%MatrixMarket matrix coordinate complex general\n% a comment\n\n"
        "2 2 2\n1 1 1.5 -2\n2 2 0 1e-3\n"
    )
    np.testing.assert_array_equal(parse_matrix_market(text.encode()), [[1.5 - 2j, 0], [0, 1e-3j]])
    text = "%%MatrixMarket matrix array integer general\n1 1\n-4\n"
    assert parse_matrix_market(text)[0, 0] == -4


@pytest.mark.parametrize(
    "text, line",
    [
        ("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 3 5.0\n", 3),
        ("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 5.0\n", 3),
        ("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 5\n1 1 6\n", 4),
        ("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 x\n", 3),
        ("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 nan\n", 3),
        ("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 5\n", 3),
        ("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n", 5),
        ("not a header\n", 1),
        ("", 1),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_matrix_market(text)
    assert err.value.line == line


@pytest.mark.parametrize("qualifier", ["symmetric", "skew-symmetric", "hermitian"])
def test_unsupported_symmetry(qualifier):
    with pytest.raises(UnsupportedFormat):
        parse_matrix_market(f"%%MatrixMarket matrix coordinate real {qualifier}\n1 1 1\n1 1 1\n")


def test_unsupported_pattern_and_not_square():
    with pytest.raises(UnsupportedFormat):
        parse_matrix_market("%%MatrixMarket matrix coordinate pattern general\n1 1 1\n1 1\n")
    with pytest.raises(NotSquare):
        parse_matrix_market("%%MatrixMarket matrix array real general\n1 2\n1\n2\n")


@given(
    st.integers(1, 5).flatmap(
        lambda n: arrays(np.complex128, (n, n), elements=st.complex_numbers(max_magnitude=1e12, allow_nan=False))
    )
)
def test_round_trip(a):
    np.testing.assert_array_equal(parse_matrix_market(write_matrix_market(a)), a)


def test_round_trip_real_builtin():
    a = builtin("A6").matrix
    text = write_matrix_market(a)
    assert "real" in text.splitlines()[0]
    np.testing.assert_array_equal(parse_matrix_market(text), a)


def test_csv():
    np.testing.assert_array_equal(parse_csv("6,-3,-2\n-1,11,-8\n-7,-3,10\n"), builtin("A5").matrix)
    np.testing.assert_array_equal(parse_csv("1+2i,0\n0,1\n"), [[1 + 2j, 0], [0, 1]])
    np.testing.assert_array_equal(parse_csv(b"1.5e1-i, -2\n.5,3-0.25i"), [[15 - 1j, -2], [0.5, 3 - 0.25j]])


@pytest.mark.parametrize("text", ["1,2\n3\n", "1,abc\n2,3\n", "1,2 i\n3,4\n", "", "inf,0\n0,1\n"])
def test_csv_errors(text):
    with pytest.raises(ParseError):
        parse_csv(text)


def test_csv_not_square():
    with pytest.raises(NotSquare):
        parse_csv("1,2,3\n4,5,6\n")


def test_builtins():
    a1 = builtin("A1")
    assert a1.provenance is Provenance.BUILTIN_PAPER
    np.testing.assert_array_equal(a1.matrix[0], [-7, 1, -0.2, 2])
    np.testing.assert_array_equal(builtin("A6").matrix[-1], [-4.9, -0.9, -0.9, 6])
    assert [builtin(n).matrix.shape[0] for n in BUILTIN_NAMES] == [4, 4, 4, 4, 3, 4]
    with pytest.raises(UnknownName):
        builtin("A7")


def test_builtin_class_labels():
    for name in BUILTIN_NAMES:
        c = classify(builtin(name).matrix)
        assert c.is_nekrasov
        assert c.is_sdd == (name in {"A1", "A2", "A3", "A4"})


def test_load_matrix(tmp_path):
    p = tmp_path / "a5.csv"
    p.write_text("6,-3,-2\n-1,11,-8\n-7,-3,10\n")
    nm = load_matrix(p)
    assert nm.name == "a5.csv" and nm.provenance is Provenance.FILE
    q = tmp_path / "a5.mtx"
    q.write_text(write_matrix_market(nm.matrix))
    np.testing.assert_array_equal(load_matrix(q).matrix, nm.matrix)
    np.testing.assert_array_equal(load_matrix(q, "matrix-market").matrix, nm.matrix)
    with pytest.raises(UnsupportedFormat):
        load_matrix(tmp_path / "a5.txt")


def test_round4_half_away_from_zero():
    assert round4(0.00005) == Decimal("0.0001")
    assert round4(-0.00005) == Decimal("-0.0001")
    assert round4(0.12345) == Decimal("0.1235")
    assert fmt4(1.0) == "1.0000"
    assert fmt4(None) == "-"


def test_report_schema():
    a = builtin("A5").matrix
    d = report_dict("A5", 3, classify(a), best_bound(a, exact=True))
    d = json.loads(json.dumps(d))
    assert set(d) >= {"name", "n", "class", "margins", "bounds", "exact"}
    assert d["class"] == {"sdd": False, "nekrasov": True, "h_matrix": True}
    assert set(d["bounds"]) == {"varah", "bound2", "bound3", "best"}
    assert d["bounds"]["varah"] is None
    assert d["bounds"]["best"] == d["bounds"]["bound2"]
    assert len(d["margins"]["sdd"]) == 3
