import _eppa as eppa


def triangle():
    return eppa.Graph(3, [(0, 1), (1, 2), (0, 2)])


def test_switching_roundtrip():
    g = eppa.Graph(3, [(0, 1), (1, 2)])
    assert eppa.seidel_switch(g, {1}).edges == []
    assert eppa.seidel_switch(eppa.seidel_switch(g, {0, 2}), {0, 2}) == g


def test_associated_two_graph():
    t = eppa.associated_two_graph(triangle())
    assert t.triples == [(0, 1, 2)]
    assert eppa.associated_two_graph(eppa.Graph(3, [(0, 1), (1, 2)])).triples == []


def test_find_switch_set():
    g = eppa.Graph(2, [(0, 1)])
    h = eppa.Graph(2, [])
    assert eppa.find_switch_set(g, h, [(0, 0), (1, 1)]) == {1}
    assert eppa.find_switch_set(g, g, [(0, 0), (1, 1)]) == set()


def test_double_cover_and_witness():
    a, pode = eppa.double_cover(eppa.Graph(2, [(0, 1)]))
    assert a.n == 4
    assert a.dist(0, 1) == 3
    assert a.dist(0, 2) == 1
    assert pode == [0, 1, 0, 1]

    ctx = eppa.build_witness(a)
    assert ctx.num_edges == 2
    assert ctx.witness_size == 8
    assert ctx.distance((0, 0b00), (0, 0b11)) == 3
    assert ctx.distance((0, 0b00), (1, 0b00)) == 1

    perm, flips = eppa.extend_automorphism(ctx, [(0, 2), (1, 3), (2, 0), (3, 1)])
    assert sorted(perm) == [0, 1]


def test_switching_eppa_pipeline():
    g = eppa.Graph(2, [(0, 1)])
    cert = eppa.switching_eppa_witness(g)
    assert cert.witness.n == 4
    e = cert.embedding
    assert cert.witness.has_edge(e[0], e[1])

    ext = eppa.extend_plain_iso(cert, [(0, 1), (1, 0)])
    assert ext[e[0]] == e[1] and ext[e[1]] == e[0]

    # switching both endpoints leaves the induced edge intact
    swapped, s_h = eppa.extend_switching_iso(cert, [(0, 0), (1, 1)], {0, 1})
    assert sorted(swapped) == list(range(cert.witness.n))
    assert s_h


def test_two_graph_eppa_pipeline():
    t = eppa.TwoGraph(3, [(0, 1, 2)])
    cert = eppa.two_graph_eppa_witness(t)
    assert eppa.associated_two_graph(cert.derived) == t
    e = cert.embedding
    assert cert.witness.has_triple(e[0], e[1], e[2])

    ext = eppa.extend_two_graph_partial(cert, [(1, 2), (2, 1)])
    assert ext[e[1]] == e[2] and ext[e[2]] == e[1]


def test_parse_serialize():
    g = eppa.parse_graph("graph 3\n0 1\n")
    assert g.edges == [(0, 1)]
    assert eppa.parse_graph(eppa.serialize(g)) == g
    a = eppa.parse_antipodal("antipodal 4\n3 1 2\n2 1\n3\n")
    assert a.matching_edges() == [(0, 1), (2, 3)]
    assert a.antipode(0) == 1


def test_invalid_inputs_rejected():
    import pytest

    with pytest.raises(ValueError):
        eppa.TwoGraph(4, [(0, 1, 2)])  # odd parity on the 4-set
    with pytest.raises(ValueError):
        eppa.AntipodalSpace(2, [(0, 1, 2)])  # no perfect matching at distance 3
