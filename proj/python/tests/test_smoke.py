from fractions import Fraction

import pytest

import pyasg


def test_poly_partial_sums_are_exact():
    b = pyasg.Backend.poly(2, 8)
    r = pyasg.alladi_partial_sums(b, [1])
    assert r["exact"]
    assert r["rows"][0]["sum"] == 1
    assert r["target"] == 1
    r = pyasg.alladi_partial_sums(b, [1, 8], set="mod:x^2+x+1,1")
    assert r["rows"][0]["sum"] == 0
    assert r["rows"][1]["sum"] == Fraction(33, 128)
    assert r["target"] == Fraction(1, 3)
    assert r["csv"].startswith("cutoff,sum_num,sum_den,target,abs_error\n")


def test_integer_arithmetic_progression():
    b = pyasg.Backend.integers(10**4)
    assert b.density("mod:4,1") == Fraction(1, 2)
    r = pyasg.alladi_partial_sums(b, [100, 10**4], set="mod:4,1")
    last = r["rows"][-1]
    assert last["sum"] is None
    assert abs(last["sum_float"] - 0.5) < 0.1


def test_worker_count_does_not_change_sums():
    b = pyasg.Backend.integers(10**5)
    one = pyasg.alladi_partial_sums(b, [10**5], set="mod:4,1", workers=1)
    four = pyasg.alladi_partial_sums(b, [10**5], set="mod:4,1", workers=4)
    assert one["csv"] == four["csv"]


def test_graph_backend():
    assert "k4" in pyasg.named_graphs()
    b = pyasg.Backend.graph("k4", 6)
    assert b.id == "graph:k4"
    r = pyasg.alladi_partial_sums(b, [1, 2, 3, 4, 5, 6])
    assert all(row["coefficients"] for row in r["rows"][2:])


def test_identities_hold_exactly():
    b = pyasg.Backend.poly(3, 5)
    f = pyasg.duality_fuzz(b, 4, triples=300, seed=5)
    assert f["trials"] == 300
    assert f["max_abs_residual"] == 0
    assert f["failure"] is None
    g = pyasg.b_transform_fuzz(pyasg.Backend.integers(500), 500, trials=200)
    assert g["max_abs_residual"] == 0


def test_statistics_and_density():
    b = pyasg.Backend.integers(100)
    s = pyasg.partial_sum_statistics(b, 100, 1)
    assert s["M"] == 1 and s["Phi"] == 100
    rows = pyasg.density_estimate(pyasg.Backend.poly(2, 4), "mod:x^2+x+1,1", [1, 2, 3, 4])
    assert rows[-1] == (4, 1, 3, Fraction(1, 3))
    assert pyasg.Backend.gaussian(100).norm("2+i") == 5


def test_errors_surface_as_value_errors():
    b = pyasg.Backend.integers(100)
    with pytest.raises(ValueError):
        pyasg.alladi_partial_sums(b, [1000])
    with pytest.raises(ValueError):
        pyasg.alladi_partial_sums(b, [10], set="mod:4,2")
    with pytest.raises(ValueError):
        pyasg.alladi_partial_sums(b, [10], weight="mass")
