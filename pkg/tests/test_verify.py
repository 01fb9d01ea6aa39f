import json
import random

import pytest

from daisycube.bitword import parse
from daisycube.census import CubeCensus
from daisycube.family import (
    DaisyCube,
    VertexSet,
    bipartite_wheel,
    downward_closure,
    fibonacci,
    hypercube,
    lucas,
    vertex_deleted,
)
from daisycube.verify import (
    CheckReport,
    check_W_relations,
    check_cube_poly_minus1,
    check_engines,
    check_kleitman,
    check_interval_union,
    check_lemma9,
    check_partial_cube,
    check_product,
    check_recenter,
    check_symmetry,
    check_theorem_DfromC,
    check_tree_like,
    paper_tasks,
    random_daisy_cubes,
    run_paper_suite,
    run_tasks,
    summarize,
)

NON_ISOMETRIC = VertexSet.from_words(["000", "100", "110", "111", "011"])
K1 = downward_closure(["000"])


def test_partial_cube_passes_on_daisy_cubes():
    for G in random_daisy_cubes(30, max_n=8, seed=4):
        assert check_partial_cube(G).passed
    assert check_partial_cube(hypercube(4)).passed


def test_partial_cube_fails_with_witness():
    r = check_partial_cube(NON_ISOMETRIC)
    assert not r.passed
    assert r.witness == {"u": "000", "v": "011", "bfs": 4, "hamming": 2}


def test_partial_cube_disconnected():
    V = VertexSet.from_words(["000", "001", "110", "111"])
    r = check_partial_cube(V)
    assert not r.passed and r.witness["bfs"] is None
    assert check_partial_cube(V, anchor=parse("000")).passed


@pytest.mark.parametrize("G", [vertex_deleted(3), hypercube(4), lucas(5), K1])
def test_distance_from_cube(G):
    assert check_theorem_DfromC(G).passed


def test_symmetry():
    assert check_symmetry(fibonacci(6)).passed
    assert check_symmetry(K1).passed
    for anchor in ("100", "110"):
        r = check_symmetry(vertex_deleted(3), parse(anchor))
        assert r.passed and r.info == {"symmetric": "no"}


def test_w_relations():
    assert check_W_relations(vertex_deleted(3)).passed
    for n in range(1, 11):
        assert check_W_relations(fibonacci(n), "fibonacci").passed
        assert check_W_relations(hypercube(min(n, 6)), "hypercube").passed


def test_w_relations_detects_wrong_closed_form():
    r = check_W_relations(lucas(5), "fibonacci")
    assert not r.passed and r.witness["identity"] == "closed-form W"


def test_tree_like():
    assert check_tree_like(vertex_deleted(3)).passed
    assert check_tree_like(bipartite_wheel(5)).passed
    assert check_tree_like(hypercube(3), engine="fast").passed


def test_tree_like_fails_off_the_class():
    # a 6-cycle is not downward closed; forcing it through the daisy path breaks the identity
    V = VertexSet.from_words(["000", "100", "110", "111", "011", "001"])
    G = DaisyCube(V, V, "six-cycle")
    r = check_tree_like(G)
    assert not r.passed and "anchor" in r.witness


def test_cube_minus1():
    assert check_cube_poly_minus1(vertex_deleted(3)).passed
    assert check_cube_poly_minus1(lucas(6)).passed
    assert check_cube_poly_minus1(K1).passed


def test_product():
    q1 = hypercube(1)
    assert check_product(q1, q1, parse("0"), parse("0")).passed
    f2 = fibonacci(2)
    assert check_product(f2, f2, parse("00"), parse("00")).passed
    assert check_product(lucas(3), K1, parse("010"), parse("000")).passed
    with pytest.raises(ValueError):
        check_product(f2, f2, parse("11"), parse("00"))


@pytest.mark.parametrize("top, anchor", [("111", "010"), ("000", "110"), ("101", "010"), ("1100", "0011")])
def test_subcube_alternating(top, anchor):
    r = check_lemma9(parse(top), parse(anchor))
    assert r.passed


def test_subcube_alternating_values():
    from daisycube.census import census_subcube, distance_poly
    from daisycube.poly import substitute_neg

    assert str(substitute_neg(distance_poly(census_subcube(parse("000"), parse("110"))))) == "x^2"
    assert str(substitute_neg(distance_poly(census_subcube(parse("101"), parse("010"))))) == "-x"


def test_kleitman():
    rng = random.Random(2)
    for _ in range(50):
        X = VertexSet(8, {rng.getrandbits(8) for _ in range(rng.randint(1, 12))})
        Y = VertexSet(8, {rng.getrandbits(8) for _ in range(rng.randint(1, 12))})
        r = check_kleitman(X, Y)
        assert r.passed
    same = VertexSet(5, [0b10110, 0b01011])
    assert check_kleitman(same, same).passed
    full = check_kleitman(["11111"], ["10100"])
    assert full.passed


def test_kleitman_small_case():
    # closures {000,100,010,110} and {000,010,001,011} meet in {000,010}
    r = check_kleitman(["110"], ["011"])
    assert r.passed and r.witness is None


def test_interval_union_recenter_and_engines():
    for G in (lucas(6), bipartite_wheel(4)):
        assert check_interval_union(G).passed
        assert check_engines(G).passed
    G = vertex_deleted(3)
    assert check_recenter(G, parse("101"), parse("110")).passed
    assert check_recenter(NON_ISOMETRIC, parse("011"), parse("110")).passed


def test_engines_detects_disagreement(monkeypatch):
    import daisycube.verify as verify_mod

    monkeypatch.setattr(verify_mod, "census_daisy_fast", lambda G, u: CubeCensus(u, {(0, 0): 1}))
    r = verify_mod.check_engines(lucas(3))
    assert not r.passed and r.witness["cells"]


def test_failing_report_has_recheckable_witness():
    r = check_partial_cube(NON_ISOMETRIC)
    u, v = parse(r.witness["u"]), parse(r.witness["v"])
    assert (u.bits ^ v.bits).bit_count() == r.witness["hamming"]


def test_report_serialisation():
    r = check_symmetry(vertex_deleted(3), parse("100"))
    doc = json.loads(r.to_json())
    assert set(doc) == {"check", "instance", "verdict", "witness", "info"}
    assert doc["verdict"] == "pass" and doc["witness"] is None
    text = check_partial_cube(NON_ISOMETRIC).to_text()
    assert text.startswith("FAIL partial-cube") and '"bfs": 4' in text
    assert CheckReport("x", {}, "pass").to_text() == "PASS x"


def test_suite_is_deterministic():
    a = [r.to_json() for r in run_paper_suite(max_n=4, seed=3, n_random=10, n_kleitman=10)]
    b = [r.to_json() for r in run_paper_suite(max_n=4, seed=3, n_random=10, n_kleitman=10, workers=3)]
    assert a == b
    assert all('"verdict": "pass"' in line for line in a)


def test_suite_contents():
    tasks = paper_tasks(max_n=3, seed=0, n_random=2, n_kleitman=2)
    reports = run_tasks(tasks)
    tally = summarize(reports)
    assert set(tally) >= {"partial-cube", "distance-from-cube", "tree-like", "product", "subcube-alternating", "kleitman", "recenter"}
    assert all(v["fail"] == 0 for v in tally.values())


def test_random_instances_are_seeded():
    a = random_daisy_cubes(5, seed=9)
    b = random_daisy_cubes(5, seed=9)
    assert [G.vertices for G in a] == [G.vertices for G in b]
    assert all(G.name.startswith("random-s9-") for G in a)
    assert all(1 <= G.n <= 8 for G in random_daisy_cubes(40, seed=1))
