import math

import pytest
from hypothesis import given, settings

from conftest import graphs
from oracles import complete_edges, cycle_edges, exact_bounds, path_edges, star_edges
from qbounds import bounds as B
from qbounds.graph import FamilySpec, Graph, complete_graph, cycle_graph, generate, is_connected, path_graph, star_graph
from qbounds.bounds import (
    K_BOUNDS,
    SCALAR_BOUNDS,
    conjecture_check,
    evaluate_all,
    prepare,
    registered_count,
)

K4, STAR4, P4, C4, C5, C6 = (
    complete_graph(4), star_graph(4), path_graph(4), cycle_graph(4), cycle_graph(5), cycle_graph(6)
)


def approx(x):
    return pytest.approx(x, rel=1e-12, abs=1e-12)


# Right-hand sides frozen from the exact (sympy) evaluation in tests/oracles.py.
@pytest.mark.parametrize(
    "fn, g, lhs, rhs, tight",
    [
        (B.bound_m1_polarization, K4, 36, 36, True),
        (B.bound_m1_polarization, P4, 10, 10, True),
        (B.bound_m1_polarization, STAR4, 12, 13, False),
        (B.bound_m1_polya_szego, K4, 36, 36, True),
        (B.bound_m1_polya_szego, P4, 10, 10.125, False),
        (B.bound_m1_polya_szego, STAR4, 12, 12, True),
        (B.bound_m1_decaen, STAR4, 12, 12, True),
        (B.bound_m1_decaen, K4, 36, 36, True),
        (B.bound_m1_decaen, C4, 16, 56 / 3, False),
        (B.bound_qindex_polarization, K4, 6, 6, True),
        (B.bound_qindex_polarization, STAR4, 4, 4.238612787525831, False),
        (B.bound_qindex_polarization, C5, 4, 4.82842712474619, False),
        (B.bound_qindex_polya_szego, K4, 6, 6, True),
        (B.bound_qindex_polya_szego, P4, 2 + math.sqrt(2), 3.811655251113366, False),
        (B.bound_qindex_polya_szego, C6, 4, 5.162277660168379, False),
        (B.bound_qindex_hong, STAR4, 4, 4, True),
        (B.bound_qindex_hong, K4, 6, 6, True),
        (B.bound_qindex_hong, C5, 4, 5.5, False),
        (B.bound_qe_polarization, K4, 6, 6, True),
        (B.bound_qe_polarization, STAR4, 5, 5.854101966249685, False),
        (B.bound_qe_polarization, P4, 2 + 2 * math.sqrt(2), 5.663441055698796, False),
        (B.bound_qe_decaen, K4, 6, 6, True),
        (B.bound_qe_decaen, STAR4, 5, 5.372281323269014, False),
        (B.bound_qe_decaen, C4, 4, 7.138802621666246, False),
    ],
)
def test_scalar_bound_examples(fn, g, lhs, rhs, tight):
    r = fn(g)
    assert r.preconditions_met
    assert r.lhs == approx(lhs)
    assert r.rhs == approx(rhs)
    assert r.residual == approx(rhs - lhs)
    assert r.tight is tight


@pytest.mark.parametrize(
    "fn, g, k, lhs, rhs, tight",
    [
        (B.bound_skplus_polarization, K4, 1, 6, 6, True),
        (B.bound_skplus_polarization, K4, 2, 8, 9.464101615137755, False),
        (B.bound_skplus_polarization, K4, 4, 12, 12, True),
        (B.bound_lk_polarization, K4, 3, 6, 6, True),
        (B.bound_lk_polarization, K4, 1, 2, 0, False),
        (B.bound_lk_polarization, STAR4, 1, 0, -1.2386127875258306, False),
        (B.bound_skplus_polya_szego, K4, 1, 6, 6, True),
        (B.bound_skplus_polya_szego, K4, 2, 8, 9.464101615137755, False),
        (B.bound_skplus_polya_szego, P4, 4, 6, 6, True),
        (B.bound_lk_polya_szego, K4, 3, 6, 6, True),
        (B.bound_lk_polya_szego, K4, 1, 2, 0, False),
        (B.bound_lk_polya_szego, C6, 6, 12, 12, True),
    ],
)
def test_k_bound_examples(fn, g, k, lhs, rhs, tight):
    r = fn(g, k)
    assert r.k == k
    assert r.lhs == approx(lhs)
    assert r.rhs == approx(rhs)
    assert r.residual >= -1e-12
    assert r.tight is tight


@pytest.mark.parametrize(
    "n, edges",
    [
        (4, complete_edges(4)),
        (4, star_edges(4)),
        (4, path_edges(4)),
        (5, path_edges(5)),
        (5, cycle_edges(5)),
        (6, cycle_edges(6)),
        (5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]),
        (6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 3), (1, 2)]),
    ],
)
def test_bounds_match_exact_oracle(n, edges):
    exact = exact_bounds(n, edges)
    d = prepare(Graph(n, edges))
    for name, fn in SCALAR_BOUNDS.items():
        if name.startswith("bound_"):
            assert fn(d).rhs == pytest.approx(float(exact[name]), rel=1e-10, abs=1e-10), name
    assert B.bound_qe_decaen(d).lhs == pytest.approx(float(exact["qe"]), abs=1e-10)
    for short, fn in (("skplus_polarization", B.bound_skplus_polarization),
                      ("lk_polarization", B.bound_lk_polarization),
                      ("skplus_polya_szego", B.bound_skplus_polya_szego),
                      ("lk_polya_szego", B.bound_lk_polya_szego)):
        for k, value in exact[short].items():
            assert fn(d, k).rhs == pytest.approx(float(value), rel=1e-10, abs=1e-10), (short, k)


def test_check_diameter_eigs():
    r = B.check_diameter_eigs(K4)
    assert (r.lhs, r.rhs, r.tight) == (1, 1, True)
    r = B.check_diameter_eigs(P4)
    assert (r.lhs, r.rhs, r.tight) == (3, 3, True)
    r = B.check_diameter_eigs(C6)
    assert r.lhs == 3 and r.rhs >= 3 and r.residual >= 0


def test_check_two_eigs_complete():
    r = B.check_two_eigs_complete(complete_graph(6))
    assert (r.lhs, r.rhs, r.residual, r.tight) == (1.0, 1.0, 0.0, True)
    r = B.check_two_eigs_complete(P4)
    assert (r.lhs, r.rhs, r.residual, r.tight) == (0.0, 0.0, 0.0, True)


def test_preconditions_gate():
    two_k2 = Graph(4, [(0, 1), (2, 3)])
    reports, conjectures = evaluate_all(two_k2)
    assert reports and all(not r.preconditions_met for r in reports)
    assert all(r.lhs is None and r.reason for r in reports)
    assert len(conjectures) == 2
    assert not any(r.preconditions_met for r in evaluate_all(Graph(1))[0])
    r = B.bound_skplus_polarization(K4, 5)
    assert not r.preconditions_met and "k" in r.reason


def test_radicand_guard():
    assert B._root(-1e-12, 1.0) == 0.0
    assert B._root(4.0, 1.0) == 2.0
    with pytest.raises(ArithmeticError):
        B._root(-1e-3, 1.0)


def test_evaluate_all_covers_registry():
    reports, conjectures = evaluate_all(P4)
    assert len(reports) == registered_count(4) == len(SCALAR_BOUNDS) + 4 * len(K_BOUNDS)
    keys = [(r.name, r.k) for r in reports]
    assert len(set(keys)) == len(keys)
    assert [c.conjecture for c in conjectures] == ["brouwer", "ashraf"]


def test_evaluate_all_k4_tight_set():
    tight = {(r.name, r.k) for r in evaluate_all(K4)[0] if r.tight}
    expected = {
        ("bound_m1_polarization", None), ("bound_m1_polya_szego", None), ("bound_m1_decaen", None),
        ("bound_qindex_polarization", None), ("bound_qindex_polya_szego", None), ("bound_qindex_hong", None),
        ("bound_qe_polarization", None), ("bound_qe_decaen", None),
        ("check_diameter_eigs", None), ("check_two_eigs_complete", None),
        ("bound_skplus_polarization", 1), ("bound_skplus_polarization", 4),
        ("bound_lk_polarization", 3), ("bound_lk_polarization", 4),
        ("bound_skplus_polya_szego", 1), ("bound_skplus_polya_szego", 4),
        ("bound_lk_polya_szego", 3), ("bound_lk_polya_szego", 4),
    }
    assert tight == expected


def test_evaluate_all_p5_holds():
    reports, _ = evaluate_all(path_graph(5))
    assert all(r.residual >= -1e-9 * max(1, abs(r.rhs)) for r in reports)


@pytest.mark.parametrize("n", range(3, 11))
def test_complete_graph_equality_cases(n):
    d = prepare(complete_graph(n))
    for r in (B.bound_skplus_polarization(d, 1), B.bound_lk_polarization(d, n - 1),
              B.bound_skplus_polya_szego(d, 1), B.bound_lk_polya_szego(d, n - 1),
              B.bound_qindex_polarization(d), B.bound_qindex_polya_szego(d), B.bound_qindex_hong(d),
              B.bound_qe_polarization(d), B.bound_qe_decaen(d)):
        assert r.tight, r


# -- properties over random graphs ------------------------------------------


def _sound(r):
    return r.residual >= -1e-9 * max(1.0, abs(r.rhs))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=14))
def test_soundness_and_report_invariants(g):
    reports, conjectures = evaluate_all(g)
    for r in reports:
        if r.preconditions_met:
            assert _sound(r), r
            assert r.tight == (abs(r.residual) <= 1e-8 * max(1.0, abs(r.rhs)))
        else:
            assert not is_connected(g)
    for c in conjectures:
        assert len(c.verdicts) == g.n
        assert not c.counterexample


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=12))
def test_lower_upper_duality(g):
    if not is_connected(g):
        return
    d = prepare(g)
    n = g.n
    for upper, lower in ((B.bound_skplus_polarization, B.bound_lk_polarization),
                         (B.bound_skplus_polya_szego, B.bound_lk_polya_szego)):
        assert upper(d, n).tight and lower(d, n).tight
        assert upper(d, n).rhs == 2 * g.m
        for k in range(1, n):
            assert lower(d, k).residual == pytest.approx(upper(d, n - k).residual, abs=1e-9)


# -- conjectures ----------------------------------------------------------------


def test_conjecture_examples_k4():
    b = conjecture_check(K4, "brouwer")
    a = conjecture_check(K4, "ashraf")
    assert b.verdicts[0] == approx(3)  # S_1 = 4 <= 7
    assert a.verdicts[0] == approx(1)  # S+_1 = 6 <= 7
    assert len(b.verdicts) == 4 and not b.counterexample and not a.counterexample


@pytest.mark.parametrize("n", range(3, 9))
def test_brouwer_k1_slack_on_complete_graphs(n):
    m = n * (n - 1) // 2
    assert conjecture_check(complete_graph(n), "brouwer").verdicts[0] == pytest.approx(m + 1 - n, abs=1e-9)


def test_conjecture_check_rejects_unknown():
    with pytest.raises(ValueError):
        conjecture_check(K4, "mohar")


def test_counterexample_flag():
    fake = B.ConjectureReport("ashraf", (10.0,), (7,), (-3.0,), -3.0, 1)
    assert fake.counterexample


def test_conjectures_exhaustive_n5():
    for g in generate(FamilySpec("exhaustive", n=5)):
        d = prepare(g)
        for which in ("brouwer", "ashraf"):
            c = conjecture_check(d, which)
            assert min(c.verdicts) >= -1e-9 * max(1, c.limits[c.min_k - 1])


def test_conjectures_hold_on_1000_gnp_samples():
    spec = FamilySpec("gnp", n=20, p=0.5, seed=42, samples=1000)
    worst = min(
        conjecture_check(d, which).min_slack
        for d in map(prepare, generate(spec))
        for which in ("brouwer", "ashraf")
    )
    assert worst >= -1e-9


def test_equality_characterizations_exhaustive():
    """'Only if' directions, falsification-tested on every connected graph with n <= 6."""
    offenders = []
    for n in range(2, 7):
        for g in generate(FamilySpec("exhaustive", n=n, connected_only=True)):
            complete = g.is_complete()
            star = g.m == n - 1 and max(g.degrees) == n - 1
            for r in evaluate_all(g)[0]:
                if not r.tight:
                    continue
                if r.name == "check_two_eigs_complete":
                    continue
                if r.name in ("bound_skplus_polarization", "bound_skplus_polya_szego") and r.k < n:
                    ok = complete and r.k == 1
                elif r.name in ("bound_lk_polarization", "bound_lk_polya_szego") and r.k < n:
                    ok = complete and r.k == n - 1
                elif r.name in ("bound_qindex_polarization", "bound_qindex_polya_szego",
                                "bound_qe_polarization", "bound_qe_decaen"):
                    ok = complete
                elif r.name in ("bound_m1_decaen", "bound_qindex_hong"):
                    ok = complete or star
                else:
                    ok = True
                if not ok:
                    offenders.append((g, r))
            assert B.check_two_eigs_complete(g).residual == 0
    assert offenders == []
