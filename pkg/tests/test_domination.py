import pytest

from limpack.atlas import small_graphs
from limpack.domination import DominationUndefined, dominates, gamma_enumerate, gamma_exact, gamma_ktuple_exact
from limpack.generators import gen_gnp, gen_named
from limpack.packing import exact_lk


def test_examples(petersen, c6, backend):
    for n in range(1, 7):
        assert gamma_exact(gen_named("complete", n), backend=backend).value == 1
    assert gamma_exact(c6, backend=backend).value == 2
    assert gamma_exact(petersen, backend=backend).value == 3
    # 1 and 2 vertices fail on Petersen by exhaustion
    assert gamma_enumerate(petersen) == 3
    assert gamma_ktuple_exact(gen_named("complete", 4), 2, backend=backend).value == 2


def test_ktuple_gate(c6):
    assert gamma_ktuple_exact(c6, 3).value == 6
    with pytest.raises(DominationUndefined):
        gamma_ktuple_exact(c6, 4)


def test_k1_equals_gamma():
    for g in small_graphs(6, min_n=1)[::5]:
        assert gamma_ktuple_exact(g, 1) == gamma_exact(g)


def test_matches_enumeration(backend):
    graphs = small_graphs(6, min_n=1) + [gen_gnp(10, p, s) for p in (0.3, 0.6) for s in range(3)]
    for g in graphs:
        for k in range(1, g.min_deg + 2):
            r = gamma_ktuple_exact(g, k, backend=backend)
            assert r.value == gamma_enumerate(g, k)
            assert dominates(g, r.witness, k) and len(r.witness) == r.value


def test_packing_relations_and_monotonicity():
    for g in small_graphs(7, min_n=1)[::4]:
        gamma = gamma_exact(g).value
        assert exact_lk(g, 1).optimum <= gamma
        prev = 0
        for k in range(1, g.min_deg + 2):
            gk = gamma_ktuple_exact(g, k).value
            lk = exact_lk(g, k).optimum
            assert lk <= k * gamma and lk <= gk
            assert gk >= prev
            prev = gk


def test_budget_unknown():
    r = gamma_exact(gen_gnp(30, 0.2, 1), budget=0)
    assert not r.complete and r.value is None and r.to_json()["status"] == "unknown"


def test_empty_graph():
    assert gamma_exact(gen_named("path", 0)).value == 0
