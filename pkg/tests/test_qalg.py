import itertools
import json

import pytest

from radtilt.field import PrimeField
from radtilt.qalg import AlgebraError, BoundQuiverAlgebra, ParseError, parse_algebra, path_algebra, rename_vertices


def test_linear_a4_cubic_relation_dim(eje1a):
    assert eje1a.dim == 9


def test_one_vertex():
    A = parse_algebra("vertices 1\n")
    assert A.dim == 1 and A.vertices == ("1",)


def test_six_vertex_dim(aprsix):
    # 6 idempotents, 6 arrows, paths ga*al ~ de*be (one class), mu*la = 0
    assert aprsix.dim == 13


def test_relation_canonical_form(aprsix):
    texts = sorted(r.to_text() for r in aprsix.relations)
    assert texts == ["de*be - ga*al", "mu*la"]


def test_associativity_all_triples(aprsix):
    A = aprsix
    n = A.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = ({i: 1}, {j: 1}, {k: 1})
        assert A.multiply(A.multiply(x, y), z) == A.multiply(x, A.multiply(y, z))


def test_cartan_counts_paths(eje1a):
    C = eje1a.cartan
    assert int(C.sum()) == eje1a.dim
    # no path of length three from 1 to 4
    i1, i4 = eje1a.vertices.index("1"), eje1a.vertices.index("4")
    assert C[i4, i1] == 0


def test_parse_error_position():
    with pytest.raises(ParseError) as e:
        parse_algebra("vertices 1 2\narrow a 1 3\n")
    assert e.value.line == 2


def test_relation_of_length_one_rejected():
    with pytest.raises(AlgebraError):
        parse_algebra("vertices 1 2\narrow a 1 2\nrelation a\n")


def test_disconnected_rejected():
    with pytest.raises(AlgebraError):
        parse_algebra("vertices 1 2\n")


def test_non_admissible_cycle_rejected():
    with pytest.raises(AlgebraError):
        parse_algebra("vertices 1\narrow x 1 1\n")


def test_json_roundtrip(aprsix):
    B = BoundQuiverAlgebra.from_json(json.loads(json.dumps(aprsix.to_json())))
    assert B.dim == aprsix.dim and (B.cartan == aprsix.cartan).all()


def test_text_roundtrip(eje1a):
    B = parse_algebra(eje1a.to_text())
    assert B.to_text() == eje1a.to_text()


def test_opposite_reverses_cartan(eje1a):
    assert (eje1a.opposite().cartan == eje1a.cartan.T).all()


def test_prime_field():
    A = parse_algebra("vertices 1 2 3\narrow a 1 2\narrow b 2 3\nrelation b*a\n", field=PrimeField(7))
    assert A.dim == 5


def test_rename_vertices():
    A = path_algebra(["1", "2"], [("a", "1", "2")])
    B = rename_vertices(A, {"1": "x", "2": "y"})
    assert B.vertices == ("x", "y") and B.dim == 3
