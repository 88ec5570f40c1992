import pytest

from radtilt.artrans import (
    PROJECTIVE,
    DecomposableInputError,
    KnittingError,
    RepInfinite,
    RepresentationInfiniteError,
    almost_split_sequence,
    has_length,
    irreducible_between,
    knit_ar_quiver,
    mesh_violations,
    require_finite,
    tau,
    tau_consistency,
    tau_inv,
    verify_almost_split,
)
from radtilt.catalog import builtin
from radtilt.qalg import parse_algebra, path_algebra
from radtilt.repmod import direct_sum, injective, is_isomorphic, projective, simple

KRONECKER_FREE_A3_TILDE = "vertices 1 2 3 4\narrow a 1 2\narrow b 2 4\narrow d 1 3\narrow g 3 4\n"


def test_a2_translate():
    A = path_algebra(["1", "2"], [("a", "1", "2")])
    assert is_isomorphic(tau(simple(A, "1")), simple(A, "2"))[0]
    assert is_isomorphic(tau_inv(simple(A, "2")), simple(A, "1"))[0]
    assert tau(projective(A, "1")) == PROJECTIVE


def test_eje1a_counts(eje1a):
    G = knit_ar_quiver(eje1a)
    assert len(G.nodes) == 9
    assert G.is_acyclic()


def test_six_vertex_counts(aprsix):
    G = knit_ar_quiver(aprsix)
    assert len(G.nodes) == 20
    assert tau_inv(simple(aprsix, "1")).dims == (2, 1, 1, 0, 1, 0)


@pytest.mark.parametrize("name", ["eje1a", "eje1b", "aprsix", "ejemplo1a", "ejemplo1b", "a4cx"])
def test_tau_matches_knitting_and_meshes(name):
    G = knit_ar_quiver(builtin(name))
    assert tau_consistency(G) == []
    assert mesh_violations(G) == []
    ok, _ = has_length(G)
    assert ok


def test_almost_split_sequences(eje1a):
    G = knit_ar_quiver(eje1a)
    for n in G.nodes:
        if n.tau is not None:
            assert verify_almost_split(G, n.index)


def test_almost_split_shape(eje1a):
    seq = almost_split_sequence(simple(eje1a, "2"))
    assert seq.left.dims == (0, 0, 1, 0) and seq.middle.dims == (0, 1, 1, 0)


def test_projective_has_no_almost_split_sequence(eje1a):
    with pytest.raises(Exception):
        almost_split_sequence(projective(eje1a, "1"))


def test_decomposable_input_rejected(eje1a):
    M, _, _ = direct_sum([simple(eje1a, "1"), simple(eje1a, "2")])
    with pytest.raises(DecomposableInputError):
        tau(M)


def test_a3_tilde_detected_infinite():
    res = knit_ar_quiver(parse_algebra(KRONECKER_FREE_A3_TILDE))
    assert isinstance(res, RepInfinite) and not res
    with pytest.raises(RepresentationInfiniteError):
        require_finite(res)


def test_kronecker_detected_infinite():
    res = knit_ar_quiver(parse_algebra("vertices 1 2\narrow a 1 2\narrow b 1 2\n"))
    assert isinstance(res, RepInfinite)


def test_locate_and_irreducible_maps(eje1a):
    G = knit_ar_quiver(eje1a)
    i, w = G.locate(injective(eje1a, "2"))
    assert G.nodes[i].injective == "2" and w.is_isomorphism()
    p = G.projective_node("2")
    assert len(irreducible_between(G, G.projective_node("3"), p)) == 1


def test_has_length_on_graphs():
    assert has_length({0: [1, 2], 1: [3], 2: [3]})[0]
    ok, (p, q) = has_length({0: [1, 3], 1: [2], 2: [3]})
    assert not ok and p[0] == q[0] == 0 and p[-1] == q[-1] == 3 and len(p) != len(q)


def test_dot_export_one_vertex():
    G = knit_ar_quiver(builtin("one_vertex"))
    dot = G.to_dot()
    assert dot.startswith("digraph") and dot.count("[label=") == 1


def test_json_export_is_versioned(eje1a):
    js = knit_ar_quiver(eje1a).to_json()
    assert js["schema_version"] == 1 and len(js["nodes"]) == 9


def test_small_cap_stalls_or_reports():
    A = builtin("aprsix")
    res = knit_ar_quiver(A, node_cap=5)
    assert isinstance(res, RepInfinite)
    assert "cap" in res.reason


def test_knitting_error_is_module_error():
    assert issubclass(KnittingError, Exception) and KnittingError.code == "knitting_stall"
