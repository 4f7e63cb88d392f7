import json
import math

import networkx as nx
import numpy as np
import pytest

from specgap.errors import BudgetExceeded, InfeasibleParameters, NotQuartic
from specgap.families import (
    complete_graph,
    conjectured_quartic_min,
    cubic_gn,
    random_regular_graph,
    small_quartic_min,
)
from specgap.graph import are_isomorphic, canonical_form, degree_profile, is_connected, to_graph6
from specgap.search import (
    Certificate,
    aldous_fill_report,
    brute_force_connected_regular,
    certificates_jsonl,
    enumerate_connected_regular,
    estimate_nodes,
    find_minimizers,
    is_lexmax_canonical,
    verify_quartic_conjecture,
    verify_cubic_theorem,
    verify_quartic_structure,
    verify_regular,
)
from specgap.spectra import algebraic_connectivity


def _class_count(gs):
    return len({canonical_form(g) for g in gs})


@pytest.mark.parametrize("n,k,count", [(4, 3, 1), (6, 3, 2), (8, 3, 5), (10, 3, 19), (12, 3, 85),
                                       (5, 4, 1), (6, 4, 1), (7, 4, 2), (8, 4, 6), (9, 4, 16), (10, 4, 59),
                                       (7, 2, 1), (6, 5, 1), (8, 5, 3), (10, 5, 60)])
def test_counts(n, k, count):
    gs = enumerate_connected_regular(n, k)
    assert len(gs) == count
    assert _class_count(gs) == count
    for g in gs:
        assert is_connected(g) and degree_profile(g) == (k, k, k)
        assert is_lexmax_canonical(g)


@pytest.mark.parametrize("n,k", [(6, 3), (8, 3), (7, 4), (6, 5), (7, 2)])
def test_brute_force_oracle(n, k):
    a = {canonical_form(g) for g in enumerate_connected_regular(n, k)}
    b = {canonical_form(g) for g in brute_force_connected_regular(n, k)}
    assert a == b


def test_networkx_atlas_oracle():
    # the graph atlas lists every graph on up to 7 vertices
    for k in (2, 3, 4):
        ref = {}
        for h in nx.graph_atlas_g():
            n = h.number_of_nodes()
            if n >= 2 and nx.is_connected(h) and all(d == k for _, d in h.degree()):
                ref[n] = ref.get(n, 0) + 1
        for n in range(k + 1, 8):
            if n * k % 2 == 0:
                assert len(enumerate_connected_regular(n, k)) == ref.get(n, 0), (n, k)


def test_deterministic_and_parallel():
    a = [to_graph6(g) for g in enumerate_connected_regular(10, 3)]
    assert a == [to_graph6(g) for g in enumerate_connected_regular(10, 3)]
    b = [to_graph6(g) for g in enumerate_connected_regular(10, 3, jobs=2)]
    assert a == b


@pytest.mark.parametrize("n,k", [(5, 3), (4, 4), (3, 5), (0, 0), (63, 2), (4, -1)])
def test_infeasible(n, k):
    with pytest.raises(InfeasibleParameters):
        enumerate_connected_regular(n, k)


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_connected_regular(12, 3, budget=10)
    with pytest.raises(BudgetExceeded):
        enumerate_connected_regular(20, 4, budget=10**4, check_budget=True)


def test_estimate_scales():
    assert estimate_nodes(8, 3) < estimate_nodes(12, 3) < estimate_nodes(16, 3)


def test_lexmax_canonical():
    g = enumerate_connected_regular(8, 3)[0]
    assert is_lexmax_canonical(g)
    perm = list(reversed(range(8)))
    assert not is_lexmax_canonical(g.relabel(perm)) or g.relabel(perm) == g


# -- certificates ------------------------------------------------------------

def test_cubic_certificates():
    for n in (10, 12):
        cert = verify_cubic_theorem(n)
        assert cert.matches_expected
        assert len(cert.minimizers) == 1
        assert abs(cert.min_mu - algebraic_connectivity(cubic_gn(n))) < 1e-12


def test_cubic_small_is_report_only():
    cert = verify_cubic_theorem(8)
    assert cert.matches_expected is None and "report only" in cert.note
    assert cert.total_enumerated == 5


def test_quartic_certificates():
    for n in range(5, 11):
        cert = verify_quartic_conjecture(n)
        assert cert.matches_expected, n
    cert8 = verify_quartic_conjecture(8)
    assert "G8" in cert8.note and are_isomorphic(cert8.minimizer_graphs[0], small_quartic_min(8)[0])


def test_verify_regular_dispatch():
    assert verify_regular(10, 3).matches_expected
    assert verify_regular(7, 4).matches_expected
    cert = verify_regular(8, 5)
    assert cert.matches_expected is None and cert.total_enumerated == 3


def test_find_minimizers_ties():
    g = cubic_gn(10)
    cert = find_minimizers(10, 3, graphs=[g, g.relabel(list(range(9, -1, -1)))])
    assert len(cert.minimizers) == 2
    empty = find_minimizers(4, 3, graphs=[])
    assert empty.total_enumerated == 0 and math.isnan(empty.min_mu)


def test_certificate_json():
    cert = verify_cubic_theorem(10)
    d = json.loads(cert.to_json())
    assert d["n"] == 10 and d["k"] == 3 and d["total_enumerated"] == 19
    assert d["matches_expected"] is True
    assert isinstance(d["minimizers"], list) and d["min_mu"] > 0
    lines = certificates_jsonl([cert, cert]).splitlines()
    assert len(lines) == 2 and json.loads(lines[1]) == d


def test_aldous_fill():
    row = aldous_fill_report(10, 3)
    assert row.coincides_with_mu_min
    assert abs(row.scale - 300 / (2 * math.pi ** 2)) < 1e-12
    assert abs(row.max_tau - 3 / algebraic_connectivity(cubic_gn(10))) < 1e-9
    assert row.ratio == row.max_tau / row.scale


# -- structure -----------------------------------------------------------------

def test_structure_conjectured():
    for n in range(11, 40):
        v = verify_quartic_structure(conjectured_quartic_min(n))
        assert v.conforms, (n, v.block_report)
    v = verify_quartic_structure(conjectured_quartic_min(11))
    assert v.block_report == ["D4", "~D4"]


def test_structure_small():
    assert verify_quartic_structure(complete_graph(5)).conforms
    for n in range(5, 11):
        for g in small_quartic_min(n):
            assert verify_quartic_structure(g).conforms, n


def test_structure_random_unrecognized():
    rng = np.random.default_rng(12)
    for _ in range(10):
        g = random_regular_graph(12, 4, rng)
        v = verify_quartic_structure(g)
        assert not v.conforms


def test_structure_not_quartic():
    with pytest.raises(NotQuartic):
        verify_quartic_structure(cubic_gn(10))
