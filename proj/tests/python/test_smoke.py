import pytest

import hyperdom


def test_fano_invariants():
    f = hyperdom.generate("F")
    assert (f.n, f.m) == (7, 7)
    assert hyperdom.domination_number(f)["value"] == 1
    assert hyperdom.transversal_number(f)["value"] == 3
    assert hyperdom.matching_number(f)["value"] == 1
    assert f.is_linear() and f.is_intersecting()


@pytest.mark.parametrize("name", ["F1", "F1-", "F2", "F3"])
def test_family_members(name):
    h = hyperdom.generate(name)
    assert hyperdom.domination_number(h)["value"] == 3
    assert hyperdom.transversal_number(h)["value"] == 3
    assert hyperdom.matching_number(h)["value"] == 1
    report = hyperdom.lemma_report(h)
    assert all(c["holds"] for c in report["clauses"])


def test_parse_write_round_trip():
    h = hyperdom.Hypergraph(3, [[2, 3], [1, 2]])
    text = hyperdom.write(h)
    assert text == "3 2\n1 2\n2 3\n"
    assert hyperdom.parse(text) == h
    assert h.edges == [[1, 2], [2, 3]]


def test_errors_carry_codes():
    with pytest.raises(hyperdom.HyperdomError) as info:
        hyperdom.parse("3 1\n1 1 2\n")
    assert info.value.code == "SyntaxError"
    with pytest.raises(hyperdom.HyperdomError) as info:
        hyperdom.generate("nope")
    assert info.value.code == "UnknownName"


def test_isomorphism_and_reduction():
    f3 = hyperdom.generate("F3")
    assert hyperdom.is_isomorphic(f3, f3)
    assert hyperdom.find_isomorphism(hyperdom.generate("F"), hyperdom.generate("F-")) is None
    trace = hyperdom.reduce(f3)
    hprime = hyperdom.Hypergraph(trace["hprime"]["n"], trace["hprime"]["edges"])
    assert hyperdom.is_isomorphic(hprime, hyperdom.generate("F-"))


def test_solvers_agree_with_brute_force():
    for seed in range(30):
        h = hyperdom.random_hypergraph(3, 7, 5, seed)
        for kind, fn in [("gamma", hyperdom.domination_number), ("tau", hyperdom.transversal_number),
                         ("alpha", hyperdom.matching_number)]:
            assert fn(h)["value"] == hyperdom.brute_force(h, kind)["value"]


def test_reports():
    bound = hyperdom.verify_bound(3, trials=50, seed=1)
    assert bound["verdict"] == "PASS"
    a = hyperdom.verify_all(trials=50)
    assert a == hyperdom.verify_all(trials=50)
    assert a["verdict"] == "PASS"
