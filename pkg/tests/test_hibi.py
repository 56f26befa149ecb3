from distlat.hibi import (
    Binomial,
    complete_intersection_verdict,
    ideal_generators,
    minimality_certificate,
    render_ideal,
    render_ideal_document,
)
from distlat.structure import chain_lattice


def test_generators_examples(diamond, b3):
    assert ideal_generators(chain_lattice(4)) == []
    (g,) = ideal_generators(diamond)
    assert render_ideal([g], diamond.names) == "x[a]*x[b] - x[top]*x[bot]\n"
    gens = ideal_generators(b3)
    assert len(gens) == 9
    assert "x[1]*x[2] - x[12]*x[e]" in render_ideal(gens, b3.names).splitlines()


def test_binomial_shape(b3):
    for g in ideal_generators(b3):
        a, b = g.plus_pair
        j, m = g.minus_pair
        assert a < b
        assert not b3.leq[a, b] and not b3.leq[b, a]
        assert (j, m) == (b3.join(a, b), b3.meet(a, b))
        assert b3.leq[m, j]
        assert {a, b} != {j, m}


def test_minimality(diamond, b3):
    assert minimality_certificate(ideal_generators(diamond))
    assert minimality_certificate(ideal_generators(b3))
    assert minimality_certificate([])
    g = Binomial((1, 2), (3, 0))
    assert not minimality_certificate([g, g])


def test_verdicts(diamond, diamond2, b3):
    v = complete_intersection_verdict(diamond)
    assert (v.ambient_dim, v.variety_dim, v.codim, v.generator_count, v.is_complete_intersection) == (4, 3, 1, 1, True)
    v = complete_intersection_verdict(diamond2)
    assert (v.ambient_dim, v.variety_dim, v.codim, v.generator_count, v.is_complete_intersection) == (7, 5, 2, 2, True)
    v = complete_intersection_verdict(b3)
    assert (v.ambient_dim, v.variety_dim, v.codim, v.generator_count, v.is_complete_intersection) == (8, 4, 4, 9, False)


def test_render_document(diamond, chain3):
    assert render_ideal_document(chain3) == "# ideal I(L): 0 generators, ambient 3, codim 0\n"
    doc = render_ideal_document(diamond)
    assert doc.splitlines()[0] == "# ideal I(L): 1 generators, ambient 4, codim 1"


def test_render_sorted(b3):
    lines = render_ideal(ideal_generators(b3), b3.names).splitlines()
    assert lines == sorted(lines)
    assert all(line.isascii() for line in lines)
