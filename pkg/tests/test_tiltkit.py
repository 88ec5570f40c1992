import pytest

from radtilt.artrans import RepInfinite, knit_ar_quiver
from radtilt.catalog import builtin, parse_modules
from radtilt.qalg import path_algebra
from radtilt.radcalc import calculus, depth, nilpotency_index
from radtilt.repmod import hom_space, injective, is_isomorphic, projective, simple
from radtilt.tiltkit import (
    AprError,
    NotTiltingError,
    apr_tilt,
    classify_torsion,
    endo_presentation,
    index_comparison,
    is_free_sink,
    is_tilting,
    torsion_axiom_violations,
)


@pytest.fixture(scope="module")
def eje1a_datum(eje1a):
    return is_tilting(eje1a, parse_modules(eje1a, "P(1)+P(2)+P(3)+S(3)"))


def test_eje1a_tilting_classes(eje1a_datum):
    d = eje1a_datum
    G = d.gamma
    assert [G.nodes[i].label for i in d.torsion_free] == ["P4"]
    assert d.separating
    assert torsion_axiom_violations(d) == []


def test_eje1a_presentation(eje1a_datum):
    B = eje1a_datum.B
    assert len(B.vertices) == 4 and len(B.quiver.arrows) == 4
    assert len(B.relations) == 1 and len(B.relations[0].terms) == 2  # one commutativity relation
    assert B.dim == 9
    assert nilpotency_index(B).r == 5
    assert eje1a_datum.splitting is False


def test_eje1a_transport_lands_in_rad2(eje1a, eje1a_datum):
    f = hom_space(simple(eje1a, "2"), injective(eje1a, "2")).basis[0]
    assert depth(f) == 1
    assert depth(eje1a_datum.F_map(f)) == 2


def test_functor_identity(eje1a, eje1a_datum):
    M = simple(eje1a, "2")
    FM = eje1a_datum.F(M)
    assert eje1a_datum.F_map(M.identity()).is_isomorphism()
    assert FM.dim == sum(hom_space(T, M).dim for T in eje1a_datum.summands)


def test_projectives_go_to_projectives(eje1a, eje1a_datum):
    d = eje1a_datum
    for k, T in enumerate(d.summands):
        FT = d.F(T)
        assert is_isomorphic(FT, projective(d.B, d.presentation.vertex(k)))[0]


def test_trivial_tilt(eje1a):
    d = is_tilting(eje1a, [projective(eje1a, v) for v in eje1a.vertices])
    assert d.torsion_free == [] and len(d.torsion) == 9 and d.separating and d.splitting
    assert (d.B.cartan == eje1a.cartan).all() and d.B.dim == eje1a.dim


def test_rejections(eje1a):
    P = [projective(eje1a, v) for v in eje1a.vertices]
    with pytest.raises(NotTiltingError) as e:
        is_tilting(eje1a, P[:3])
    assert e.value.reason == "summand_count"
    with pytest.raises(NotTiltingError) as e:
        is_tilting(eje1a, [P[0], P[0], P[1], P[2]])
    assert e.value.reason == "repeated_summand"
    with pytest.raises(NotTiltingError) as e:
        is_tilting(eje1a, [P[1], P[2], P[3], simple(eje1a, "1")])
    assert e.value.reason == "pd"
    with pytest.raises(NotTiltingError) as e:
        is_tilting(eje1a, [P[0], P[1], P[2], simple(eje1a, "2")])
    assert e.value.reason == "ext"


def test_six_vertex_apr(aprsix):
    assert not is_free_sink(aprsix, "1")
    d = apr_tilt(aprsix, "1")
    G = d.gamma
    assert [G.nodes[i].label for i in d.torsion_free] == ["P1"]
    assert index_comparison(d) == {"r_A": 7, "r_B": 8}
    B = d.B
    assert len(B.relations) == 3 and all(r.is_monomial() for r in B.relations)
    # the source vertex of B corresponds to tau^-1 S_1; F'(S_1) is its simple
    Fp = d.Fprime(simple(aprsix, "1"))
    assert is_isomorphic(Fp, simple(B, "1'"))[0]


def test_six_vertex_b_paths(aprsix):
    d = apr_tilt(aprsix, "1")
    rc = calculus(d.B)
    for v in ("2'", "3'", "5'"):
        assert rc.path_length(v) == 6


def test_a2_free_sink():
    A = path_algebra(["1", "2"], [("a", "1", "2")])
    assert is_free_sink(A, "2")
    d = apr_tilt(A, "2")
    assert index_comparison(d) == {"r_A": 2, "r_B": 2}
    (arrow,) = d.B.quiver.arrows
    assert (arrow.source, arrow.target) == ("2'", "1'")


def test_apr_errors(eje1a):
    with pytest.raises(AprError):
        apr_tilt(eje1a, "1")  # a source
    with pytest.raises(AprError):
        apr_tilt(builtin("one_vertex"), "1")  # P_1 is injective


def test_counterexample_a4(a4):
    d = is_tilting(a4, parse_modules(a4, "P(1)+I(3)+tau-(P(3))+S(3)"))
    B = d.B
    assert not B.relations
    assert sorted((a.source, a.target) for a in B.quiver.arrows) == [("2'", "1'"), ("2'", "3'"), ("3'", "4'")]
    P1, P2 = projective(a4, "1"), projective(a4, "2")
    G = d.gamma
    assert G.locate(P2)[0] in d.torsion_free and G.locate(P1)[0] in d.torsion
    X, Y = d.Fprime(P2), d.F(P1)
    assert is_isomorphic(X, simple(B, "2'"))[0] and is_isomorphic(Y, simple(B, "1'"))[0]
    assert hom_space(X, Y).dim == 0
    f = hom_space(P2, P1).basis[0]
    assert depth(f) == 1


def test_eje1b_b_is_a3_tilde(eje1b):
    d = is_tilting(eje1b, parse_modules(eje1b, "I(4)+S(3)+S(2)+P(1)"))
    B = d.B
    assert not B.relations and len(B.quiver.arrows) == 4
    assert isinstance(knit_ar_quiver(B), RepInfinite)
    assert classify_torsion(eje1b, d)["splitting"] is None
    k = [i for i, T in enumerate(d.summands) if T.dims == projective(eje1b, "1").dims][0]
    u = d.presentation.vertex(k)
    assert is_isomorphic(d.F(projective(eje1b, "1")), projective(B, u))[0]
    assert is_isomorphic(d.F(injective(eje1b, "1")), injective(B, u))[0]
    f = hom_space(projective(eje1b, "1"), injective(eje1b, "1")).basis[0]
    assert not d.F_map(f).is_zero()


def test_endo_presentation_of_projectives(aprsix):
    P = endo_presentation([projective(aprsix, v) for v in aprsix.vertices])
    assert P.B.dim == aprsix.dim
