"""Smoke tests for the python bindings; the heavy verification lives in C++."""

import pytest

import ulgcox


def test_chain_series():
    a3 = ulgcox.Diagram.chain(3)
    assert a3.rank == 3
    series = ulgcox.generating_series(a3, 6)
    assert series["complete"] is True
    coefficients = series["coefficients"]
    assert len(coefficients) == 15
    assert coefficients["1,2,1"] == 4
    assert coefficients["0,0,0"] == 1


def test_words():
    d6 = ulgcox.Diagram.builtin("Dtilde6-paper")
    assert ulgcox.word_length(d6, "a1ab3ba2ab4b") == 12
    assert ulgcox.is_reduced(d6, "a1ab3ba2ab4b")
    assert ulgcox.is_ulg(d6, "a1ab3ba2ab4b")
    assert not ulgcox.is_ulg(ulgcox.Diagram.chain(3), "13")
    assert ulgcox.label_of(d6, "a1ab3ba2ab4b") == "1,1,4,4,1,1"
    assert ulgcox.geodesic_count(d6, "a1ab3ba2ab4b", "1,1,4,4,1,1") == "1"


def test_reduced_words():
    a2 = ulgcox.Diagram.chain(2)
    assert ulgcox.reduced_words(a2, "121") == ["121", "212"]
    assert ulgcox.reduced_words(a2, "121", label="1,2") == ["212"]
    with pytest.raises(RuntimeError):
        ulgcox.reduced_words(a2, "121", cap=1)


def test_typea_closed_forms():
    assert ulgcox.nonzero_coefficient_count(5) == 66
    assert ulgcox.unique_geodesic_count(4) == 17
    assert ulgcox.max_ulg_length(5) == 11
    assert ulgcox.classify_label(5, "1,2,3,2,1") == "III(b)"
    assert ulgcox.typea_coefficient(3, "1,2,1") == 4
    closed_form, enumerated = ulgcox.total_ulg_count(3, False)
    assert (closed_form, enumerated) == (19, 21)


def test_dtilde6():
    assert ulgcox.dtilde6_power_length("w", 3) == 36
    assert ulgcox.dtilde6_power_is_ulg("w", 1)
    low, high, raw = ulgcox.dtilde6_fellow_travel("w2", 40)
    assert 2 <= low <= high <= 5
    assert raw == 0


def test_errors():
    with pytest.raises(ValueError):
        ulgcox.Diagram.builtin("NoSuchDiagram")
    with pytest.raises(ValueError):
        ulgcox.Diagram.parse("vertices: a\nedges: a-b")
