import altan


def test_path_nullity_and_altan():
    g = altan.Graph(3, [(0, 1), (1, 2)])
    assert altan.nullity(g) == 1
    p = altan.pair(g, [0, 2])
    a = altan.altan(p)
    assert a.graph.n == 3 + 4
    assert altan.nullity(a.graph) == 1


def test_excess_and_kernel():
    g = altan.Graph(3, [(0, 1), (1, 2)])
    parent, alt, excess = altan.excess(g, [0, 2])
    assert (parent, alt, excess) == (1, 1, 0)
    basis = altan.kernel(g)
    assert basis == [["1", "0", "-1"]]


def test_bec_round_trip_and_kekule():
    benzene = altan.parse_bec("6")
    assert altan.kekule(benzene) == 2
    naphthalene = altan.parse_bec("55")
    assert altan.bec(naphthalene) == "55"
    assert altan.kekule(naphthalene) == 3


def test_enumeration_counts():
    assert len(altan.benzenoids(1)) == 1
    assert len(altan.benzenoids(3)) == 3
    assert len(altan.benzenoids(5)) == 22


def test_survey_emits_markdown():
    table = altan.survey("benzenoid", 3)
    assert "benzenoid" in table or "|" in table
