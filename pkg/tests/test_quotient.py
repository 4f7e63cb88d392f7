import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specgap.errors import BadPartition, NotEquitable
from specgap.families import complete_graph, conjectured_quartic_min, cubic_gn, cycle_graph, family_partition, path_graph
from specgap.quotient import (
    Partition,
    asymptotics_csv,
    asymptotics_row,
    asymptotics_table,
    count_below,
    count_below_laplacian_path,
    is_equitable,
    mu_from_quotient,
    quotient_matrix,
    second_smallest_banded,
)
from specgap.spectra import algebraic_connectivity, laplacian_matrix


def test_cubic_10_quotient():
    g = cubic_gn(10)
    p = family_partition("cubic-gn", 10)
    q = quotient_matrix(g, p)
    assert q.k == 6
    assert np.all(q.b.sum(axis=1) == 3)
    # B_ij |C_i| = B_ji |C_j|
    sizes = np.array(p.sizes)
    assert np.array_equal(q.b * sizes[:, None], (q.b * sizes[:, None]).T)
    assert np.allclose(q.symmetrized, q.symmetrized.T)


def test_quotient_spectrum_is_subset():
    for n in (10, 14, 30):
        g = cubic_gn(n)
        q = quotient_matrix(g, family_partition("cubic-gn", n))
        full = np.linalg.eigvalsh(laplacian_matrix(g))
        for ev in np.linalg.eigvalsh(q.sym_laplacian):
            assert np.min(np.abs(full - ev)) < 1e-9


def test_singletons_reproduce_laplacian():
    g = cubic_gn(12)
    q = quotient_matrix(g, Partition.singletons(g.n))
    assert np.allclose(q.laplacian, laplacian_matrix(g))


def test_cycle_partition_by_distance():
    # distance classes from vertex 0 in C_8 are equitable
    g = cycle_graph(8)
    p = Partition(((0,), (1, 7), (2, 6), (3, 5), (4,)))
    assert is_equitable(g, p)
    assert abs(mu_from_quotient(g, p) - algebraic_connectivity(g)) < 1e-12


def test_not_equitable():
    g = path_graph(4)
    p = Partition(((0, 1), (2, 3)))
    assert not is_equitable(g, p)
    with pytest.raises(NotEquitable):
        quotient_matrix(g, p)
    with pytest.raises(NotEquitable):
        mu_from_quotient(complete_graph(5), Partition((tuple(range(5)),)))


@pytest.mark.parametrize("cells", [((0, 1), (1, 2, 3, 4)), ((0, 1), (2, 3)), ((0, 1, 2, 3, 7), (4,)), ((), (0, 1, 2, 3, 4))])
def test_bad_partition(cells):
    with pytest.raises(BadPartition):
        is_equitable(complete_graph(5), Partition(cells))


def test_methods_agree():
    for n in (10, 38, 102):
        g = cubic_gn(n)
        p = family_partition("cubic-gn", n)
        vals = [mu_from_quotient(g, p, m) for m in ("dense", "banded", "auto")]
        assert max(vals) - min(vals) < 1e-10
    for n in (11, 23, 57):
        g = conjectured_quartic_min(n)
        p = family_partition("quartic-min", n)
        a, b = mu_from_quotient(g, p, "dense"), mu_from_quotient(g, p, "banded")
        assert abs(a - b) < 1e-10


def test_band_counts_match_dense():
    rng = np.random.default_rng(11)
    for _ in range(50):
        k, w = int(rng.integers(3, 15)), int(rng.integers(1, 4))
        m = np.zeros((k, k))
        for d in range(w + 1):
            v = rng.standard_normal(k - d)
            m += np.diag(v, d) + (np.diag(v, -d) if d else 0)
        evs = np.linalg.eigvalsh(m)
        band = [[m[i, i + d] if i + d < k else 0.0 for d in range(w + 1)] for i in range(k)]
        for sigma in rng.uniform(evs.min() - 1, evs.max() + 1, size=5):
            if np.min(np.abs(evs - sigma)) < 1e-8:
                continue
            assert count_below(band, sigma) == int(np.sum(evs < sigma))
        assert abs(second_smallest_banded(m) - evs[1]) < 1e-10


def test_path_count_matches_dense():
    n = 40
    left = [0.0] + [1.0] * (n - 1)
    right = [1.0] * (n - 1) + [0.0]
    evs = np.linalg.eigvalsh(laplacian_matrix(path_graph(n)))
    for sigma in np.linspace(-0.5, 4.5, 37):
        assert count_below_laplacian_path(left, right, sigma) == int(np.sum(evs < sigma))


@settings(max_examples=30)
@given(st.integers(5, 60).map(lambda m: 2 * m))
def test_quotient_equals_dense_cubic(n):
    g = cubic_gn(n)
    assert abs(mu_from_quotient(g, family_partition("cubic-gn", n)) - algebraic_connectivity(g)) < 1e-9


# -- asymptotics ------------------------------------------------------------

def test_asymptotics_ratios_small_n():
    # measured: the normalised ratio overshoots 1 at small n, then settles near 1
    got = {n: asymptotics_row(n).mu_ratio for n in (10, 50, 110, 510)}
    assert abs(got[10] - 1.1223) < 1e-3
    for n in (50, 110, 510):
        assert abs(got[n] - 1) < 2e-4


def test_asymptotics_quotient_path_large_n():
    a = asymptotics_row(4002)
    assert abs(a.mu_ratio - 1) < 1e-3


def test_tau_and_mu_ratio_product():
    for r in asymptotics_table([10, 14, 50, 102]):
        assert abs(r.mu_ratio * r.tau_ratio - 1) < 1e-12


def test_asymptotics_csv():
    rows = asymptotics_table([10, 14])
    csv = asymptotics_csv(rows)
    lines = csv.splitlines()
    assert lines[0] == "n,mu,mu_ratio,tau_ratio"
    assert lines[1].startswith("10,") and len(lines) == 3
    n, mu, mr, tr = lines[1].split(",")
    assert abs(float(mu) - algebraic_connectivity(cubic_gn(10))) < 1e-11
    assert len(mu.replace(".", "").lstrip("0")) == 12


def test_asymptotics_jobs_equal():
    assert asymptotics_table([10, 14, 18], jobs=2) == asymptotics_table([10, 14, 18])
