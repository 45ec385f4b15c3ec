import pytest

from qbax.catalog import (
    ALGEBRAS,
    MAPS,
    Aq,
    GLq2,
    GLq2Ext,
    GLq2ExtP,
    Wq,
    casimir_osc,
    casimir_weyl,
    centrality_defects,
    eta_prime,
    quantum_determinant,
)
from qbax.ncpoly import PartialMapError, check_confluence


def test_every_presentation_is_confluent():
    for name, alg in ALGEBRAS.items():
        res = check_confluence(alg)
        assert res.passed, f"{name}: {res.first_failure()}"


def test_every_map_is_a_homomorphism_where_defined():
    for name, m in MAPS.items():
        failures, _skipped = m.hom_defects()
        assert not failures, f"{name} breaks relations {failures}"


def test_partial_maps_raise_outside_their_domain():
    # the polynomial Weyl coproduct only covers part of the generator set
    partial = [m for m in MAPS.values()
               if len(m.images) < len(m.source.gens)]
    assert partial, "expected at least one partial map in the catalog"
    m = partial[0]
    missing = next(g for g in m.source.gens if not m.covers(g))
    with pytest.raises(PartialMapError):
        m(m.source.gen(missing))


def test_central_elements():
    for alg in (GLq2, GLq2Ext):
        d = quantum_determinant(alg)
        defects = centrality_defects(d)
        assert all(p.is_zero() for p in defects.values()), alg.name
    assert all(p.is_zero()
               for p in centrality_defects(eta_prime(GLq2ExtP)).values())
    assert all(p.is_zero() for p in centrality_defects(casimir_osc()).values())
    assert all(p.is_zero() for p in centrality_defects(casimir_weyl()).values())


def test_quantum_determinant_shape():
    d = quantum_determinant(GLq2)
    # a.d - q b.c in PBW order
    assert d == GLq2.word(["a", "d"]) \
        - GLq2.param("q") * GLq2.word(["b", "c"])


def test_oscillator_casimir_shape():
    c = casimir_osc()
    assert c == Aq.word(["e", "f"]) - Aq.param("q") * Aq.word(["k", "k"])


def test_weyl_casimir_is_the_unit_product():
    c = casimir_weyl()
    assert c == Wq.word(["u", "ut"])
    assert c.star() == c  # u u~ is star-invariant


def test_coproducts_have_expected_arity():
    assert MAPS["Delta"].arity == 2
    assert MAPS["Q"].arity == 1
    assert MAPS["Delta"].source is GLq2 and MAPS["Delta"].target is GLq2
