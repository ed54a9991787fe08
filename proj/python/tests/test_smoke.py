import math

import numpy as np
import pytest

import circle_potential as cp


def test_monomial_energy():
    g = cp.Grid(4096)
    assert cp.dirichlet_energy(g, cp.monomial(g, 1), 1.0) == pytest.approx(1.0, rel=0.01)


def test_energy_accepts_real_arrays():
    g = cp.Grid(512)
    t = g.angles()
    assert cp.dirichlet_energy(g, np.cos(t), 1.0) == pytest.approx(0.5, rel=0.02)


def test_full_circle_capacity():
    g = cp.Grid(1024)
    full = np.ones(g.size, dtype=bool)
    c = cp.classical_capacity(g, full, 0.5)
    assert c["value"] == pytest.approx(0.847, rel=0.02)
    assert sum(c["weights"]) == pytest.approx(1.0)
    assert cp.l2_capacity(g, full, 1.0)["value"] == pytest.approx(0.718, rel=0.03)


def test_capacity_is_monotone():
    g = cp.Grid(512)
    small = g.arc_mask(-0.3, 0.3)
    big = g.arc_mask(-1.0, 1.0)
    assert cp.classical_capacity(g, small, 0.5)["value"] < cp.classical_capacity(g, big, 0.5)["value"]


def test_extension_ratio_ceiling():
    g = cp.Grid(2048)
    r = cp.extension_ratio(g, cp.trig_polynomial(g, 3, 6), math.pi / 4, 0.5, 0.5)
    assert 0 < r["ratio"] <= 21


def test_poincare_spike():
    g = cp.Grid(1024)
    zero = np.zeros(g.size, dtype=bool)
    zero[512] = True
    f = cp.spike(g, zero, 0.15)
    rep = cp.poincare_check(g, f, zero, (-0.6, 0.6))
    assert rep["ratio"] > 0
    assert rep["zero_cells"] == 1


def test_preconditions_raise():
    g = cp.Grid(256)
    with pytest.raises(cp.PreconditionError):
        cp.classical_capacity(g, np.ones(g.size, dtype=bool), 1.5)
    with pytest.raises(cp.ConstructionError):
        cp.cantor_arcs("power", beta=0.5, depth=4, offset=0)


def test_series():
    h = cp.cantor_capacity_series(0.5, 0.5, 20000)
    assert h["trend"] == "diverges_plus_inf"
    assert h["partial_sums"][-1] == pytest.approx(sum(1 / n for n in range(1, 20001)))
    geo = cp.carleson_sum([0.5**n for n in range(1, 61)], 60)
    assert geo["trend"] == "converges"
    assert geo["limit"] == pytest.approx(-2 * math.log(2), abs=1e-6)
    lengths = cp.example_arc_lengths(200)
    assert sum(lengths) == pytest.approx(1 / math.log(2) - 1 / math.log(201))


def test_cantor_layout():
    arcs = cp.cantor_arcs("ratio", l0=3.0, r=1 / 3, depth=2)
    assert len(arcs) == 4
    assert all(length == pytest.approx(1 / 3) for _, length in arcs)
    assert len(cp.cantor_arcs("power", beta=0.5, depth=6)) == 64
