import math

import pytest

from radtilt.artrans import KnittingError
from radtilt.catalog import builtin
from radtilt.qalg import parse_algebra, path_algebra
from radtilt.radcalc import (
    EmptyInteriorError,
    NotDirectedError,
    calculus,
    depth,
    factors_through_simple,
    left_degree,
    nilpotency_index,
    nilpotency_index_oracle,
    rad_power,
    reduced_nilpotency_index,
    right_degree,
    vertex_index,
)
from radtilt.repmod import hom_space, injective, projective, simple


def linear(n):
    return path_algebra([str(i) for i in range(1, n + 1)], [(f"a{i}", str(i), str(i + 1)) for i in range(1, n)])


def test_eje1a_index(eje1a):
    rep = nilpotency_index(eje1a)
    assert rep.r == 4 and rep.maximal_vertices == ["2", "3"]
    assert reduced_nilpotency_index(eje1a) == 4 == nilpotency_index_oracle(eje1a)


def test_six_vertex_index(aprsix):
    rep = nilpotency_index(aprsix)
    assert rep.r == 7 and rep.maximal_vertices == ["2", "3", "5"]
    assert reduced_nilpotency_index(aprsix) == 7 == nilpotency_index_oracle(aprsix)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_linear_an(n):
    assert nilpotency_index(linear(n)).r == n == nilpotency_index_oracle(linear(n))


def test_ejemplo1():
    assert nilpotency_index(builtin("ejemplo1a")).r == 5
    assert nilpotency_index(builtin("ejemplo1b")).r == 4


def test_vertex_index_sum(eje1a):
    v = vertex_index(eje1a, "2")
    assert (v.n, v.m, v.r, v.path_length_check) == (2, 1, 3, 3)


def test_depth_s2_to_i2(eje1a):
    f = hom_space(simple(eje1a, "2"), injective(eje1a, "2")).basis[0]
    assert depth(f) == 1


def test_depth_zero_is_infinite(eje1a):
    f = hom_space(simple(eje1a, "2"), injective(eje1a, "2")).basis[0]
    assert depth(f.scale(0)) == math.inf


def test_depth_identity_is_zero(eje1a):
    assert depth(simple(eje1a, "2").identity()) == 0


def test_eje1b_p1_to_i1(eje1b):
    H = hom_space(projective(eje1b, "1"), injective(eje1b, "1"))
    assert H.dim == 1 and depth(H.basis[0]) == 2
    assert nilpotency_index(eje1b).r == 5


def test_six_vertex_p1_to_i1(aprsix):
    H = hom_space(projective(aprsix, "1"), injective(aprsix, "1"))
    (f,) = H.basis
    assert factors_through_simple(f, "1")
    assert depth(f) == vertex_index(aprsix, "1").r == 5


def test_rad_power_chain_containment(aprsix):
    rc = calculus(aprsix)
    F = aprsix.field
    for (x, y), p in rc.pairs.items():
        for n in range(1, len(p.layers)):
            for f in rc.layer_basis(x, y, n):
                assert rc.node_depth(f, x, y) >= n


def test_rad_power_of_modules(eje1a):
    X, Y = projective(eje1a, "3"), injective(eje1a, "3")
    assert len(rad_power(X, Y, 0)) == hom_space(X, Y).dim
    assert rad_power(X, Y, 10) == []


def test_degrees_of_irreducible(eje1a):
    # inclusion rad P2 = P3 -> P2 is irreducible; its right degree is n_2
    f = hom_space(projective(eje1a, "3"), projective(eje1a, "2")).basis[0]
    assert depth(f) == 1
    assert right_degree(f) == vertex_index(eje1a, "2").n
    assert left_degree(f) >= 1


def test_empty_interior_error():
    with pytest.raises(EmptyInteriorError):
        reduced_nilpotency_index(builtin("one_vertex"))


def test_cyclic_quiver_stalls_knitting():
    # self-injective Nakayama algebra: no simple projective to start from
    A = parse_algebra("vertices 1 2\narrow a 1 2\narrow b 2 1\nrelation b*a\nrelation a*b\n")
    with pytest.raises(KnittingError):
        calculus(A)


def test_not_directed_error_code():
    assert NotDirectedError.code == "not_directed"
