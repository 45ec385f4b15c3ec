import random
from fractions import Fraction

import pytest

from qbax.algtext import (
    AlgTextError,
    load_algebras,
    load_maps,
    map_text,
    parse_poly,
    poly_text,
    presentation_text,
)
from qbax.catalog import ALGEBRAS, MAPS, Aq, GLq2
from qbax.ncpoly import random_poly


def test_parse_simple_expressions():
    assert parse_poly("0", Aq).is_zero()
    assert parse_poly("1", Aq) == Aq.one()
    assert parse_poly("q^-1 e.k", Aq) == Aq.param("q", -1) * Aq.word(["e", "k"])
    assert parse_poly("e.f - (q - q^-1) k.k", Aq) == \
        Aq.gen("e") * Aq.gen("f") \
        - (Aq.param("q") - Aq.param("q", -1)) * Aq.word(["k", "k"])
    # * and . both multiply, parentheses and powers nest
    assert parse_poly("(k)^2 * e", Aq) == Aq.word(["k", "k", "e"])
    assert parse_poly("2/3 k", Aq) == Aq.gen("k").scale(Fraction(2, 3))


def test_parse_rejects_garbage():
    with pytest.raises(AlgTextError):
        parse_poly("nosuchgen", Aq)
    with pytest.raises(AlgTextError):
        parse_poly("e.(k", Aq)
    with pytest.raises(AlgTextError):
        parse_poly("e (x) k", Aq)  # tensor marker outside a map image
    with pytest.raises(AlgTextError):
        parse_poly("", Aq)


def test_presentation_round_trip():
    for name, alg in ALGEBRAS.items():
        text = presentation_text(alg)
        loaded = load_algebras(text)[name]
        assert loaded.gens == alg.gens
        assert loaded.unit_pairs == alg.unit_pairs
        assert loaded.rules == alg.rules, f"{name} rules changed in round trip"


def test_map_round_trip():
    for name, m in MAPS.items():
        text = map_text(m)
        loaded = load_maps(text, ALGEBRAS)[name]
        assert loaded.arity == m.arity
        assert loaded.source is m.source and loaded.target is m.target
        assert set(loaded.images) == set(m.images)
        for g, img in m.images.items():
            assert loaded.images[g] == img, f"{name}: image of gen {g} changed"


def test_poly_text_round_trip_on_random_elements():
    rng = random.Random(3)
    for alg in (Aq, GLq2):
        for _ in range(30):
            p = random_poly(alg, rng, n_terms=3, max_len=4)
            assert parse_poly(poly_text(p), alg) == p
