import cmath
import math

import numpy as np
import pytest

from qgsym import (
    Spectrum,
    build_secular_system,
    compare_spectra,
    cycle_graph,
    find_roots_modulus,
    find_roots_real,
    find_roots_unitary,
    merge_spectra,
    standard_conditions,
    weyl_count_check,
    winding_number,
)
from qgsym.errors import GridTooCoarse
from qgsym.spectra import SpectralRoot


def test_find_roots_real_simple_sine():
    s = find_roots_real(math.sin, 10.0, 0.1, complex_fn=cmath.sin)
    want = [math.pi, 2 * math.pi, 3 * math.pi]
    assert len(s.roots) == 3
    for r, w in zip(s.roots, want):
        assert r.k == pytest.approx(w, abs=1e-9)
        assert r.order == 1


def test_find_roots_real_touching_root():
    f = lambda k: 1.0 - math.cos(k)  # double zeros at 2*pi*m, no sign change
    cf = lambda z: 1.0 - cmath.cos(z)
    s = find_roots_real(f, 14.0, 0.1, complex_fn=cf)
    assert [r.order for r in s.roots] == [2, 2]
    assert s.roots[0].k == pytest.approx(2 * math.pi, abs=1e-8)
    assert s.roots[1].k == pytest.approx(4 * math.pi, abs=1e-8)


def test_find_roots_real_without_analytic_continuation():
    f = lambda k: 1.0 - math.cos(k)
    s = find_roots_real(f, 7.0, 0.1)
    assert len(s.roots) == 1
    assert s.roots[0].order == 2  # flagged as touching even without winding


def test_grid_too_coarse_on_hidden_double_crossing():
    # two near-coincident simple roots dipping just below zero inside one cell
    f = lambda k: (k - 5.05) ** 2 - 1e-6
    with pytest.raises(GridTooCoarse):
        find_roots_real(f, 10.0, 0.1)


def test_winding_number_counts_order():
    assert winding_number(lambda z: (z - 2.0) ** 3, 2.0, 0.1) == 3
    assert winding_number(lambda z: z - 5.0, 2.0, 0.1) == 0


def test_find_roots_modulus():
    fn = lambda z: cmath.exp(2j * z) - 1.0  # simple roots at m*pi
    s = find_roots_modulus(fn, 10.0, 0.05)
    want = [math.pi, 2 * math.pi, 3 * math.pi]
    assert len(s.roots) == 3
    for r, w in zip(s.roots, want):
        assert r.k == pytest.approx(w, abs=1e-8)
        assert r.order == 1


def test_find_roots_modulus_multiple_root():
    fn = lambda z: (cmath.exp(2j * z) - 1.0) ** 2
    s = find_roots_modulus(fn, 4.0, 0.05)
    assert len(s.roots) == 1
    assert s.roots[0].order == 2
    assert s.roots[0].k == pytest.approx(math.pi, abs=1e-9)


def test_find_roots_unitary_cycle():
    g, _ = cycle_graph(3, 1.0)
    sys = build_secular_system(g, standard_conditions(g))
    s = find_roots_unitary(sys, 15.0)
    want = [2 * math.pi * m / 3 for m in range(1, 8)]
    assert len(s.roots) == 7
    for r, w in zip(s.roots, want):
        assert r.k == pytest.approx(w, abs=1e-9)
        assert r.order == 2


def test_spectrum_bookkeeping():
    s = Spectrum((SpectralRoot(1.0, 2, "a"), SpectralRoot(2.0, 1, "b")), 5.0)
    assert s.count() == 3
    assert s.expanded() == [1.0, 1.0, 2.0]
    assert s.ks() == [1.0, 2.0]


def test_merge_spectra_coalesces_nearby_roots():
    a = Spectrum((SpectralRoot(1.0, 1, "a"), SpectralRoot(3.0, 1, "a")), 5.0)
    b = Spectrum((SpectralRoot(1.0 + 4e-8, 1, "b"), SpectralRoot(4.0, 2, "b")), 5.0)
    m = merge_spectra([a, b], tol=1e-7)
    assert [r.order for r in m.roots] == [2, 1, 2]
    assert m.roots[0].k == pytest.approx(1.0 + 2e-8, abs=1e-9)
    assert "a" in m.roots[0].source and "b" in m.roots[0].source


def test_compare_spectra_matching_and_mismatch():
    a = Spectrum((SpectralRoot(1.0, 2, ""), SpectralRoot(2.0, 1, "")), 5.0)
    b = Spectrum(
        (SpectralRoot(1.0 + 1e-9, 1, ""), SpectralRoot(1.0 - 1e-9, 1, ""), SpectralRoot(2.0, 1, "")),
        5.0,
    )
    res = compare_spectra(a, b, tol=1e-6)
    assert res.isospectral
    assert res.max_distance < 1e-8
    bad = Spectrum((SpectralRoot(1.0, 2, ""), SpectralRoot(2.5, 1, "")), 5.0)
    res2 = compare_spectra(a, bad, tol=1e-6)
    assert not res2.isospectral
    assert 2.0 in res2.unmatched_a and 2.5 in res2.unmatched_b


def test_weyl_count_sanity():
    g, _ = cycle_graph(3, 1.0)
    sys = build_secular_system(g, standard_conditions(g))
    s = find_roots_unitary(sys, 15.0)
    rep = weyl_count_check(s, 15.0, g.total_length, bound=2.0)
    assert rep.ok
    assert rep.counted == 14  # 7 roots of order 2
    assert rep.estimate == pytest.approx(15.0 * 3.0 / math.pi)


def test_roots_exclude_zero_and_respect_kmax():
    s = find_roots_real(math.sin, 2 * math.pi, 0.1, complex_fn=cmath.sin)
    assert all(r.k > 0 for r in s.roots)
    assert all(r.k <= 2 * math.pi + 1e-9 for r in s.roots)
    assert len(s.roots) == 2
