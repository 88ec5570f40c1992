"""Dynkin tables, APR chains and the claim registry."""

import pytest

from radtilt.bench import (
    CLAIMS,
    INAPPLICABLE,
    REFUTED,
    VERIFIED,
    ChainError,
    DynkinError,
    UnknownClaimError,
    corpus,
    dynkin_algebra,
    dynkin_index,
    dynkin_type,
    hereditary_propinc_iff,
    orientation_sweep,
    positive_roots,
    resolve_instance,
    tilt_chain,
    verify,
    hereditary_index,
)
from radtilt.catalog import builtin


@pytest.mark.parametrize(
    "kind,n,roots,r",
    [("A", 1, 1, 1), ("A", 4, 10, 4), ("D", 4, 12, 5), ("D", 5, 20, 7), ("E", 6, 36, 11), ("E", 7, 63, 17), ("E", 8, 120, 29)],
)
def test_root_counts_and_indices(kind, n, roots, r):
    assert positive_roots(kind, n) == roots
    assert hereditary_index(kind, n) == r


def test_bad_dynkin_type():
    with pytest.raises(DynkinError):
        positive_roots("D", 3)
    with pytest.raises(DynkinError):
        dynkin_algebra("E", 9)


def test_dynkin_type_recognition():
    assert dynkin_type(dynkin_algebra("D", 5, "+-+-")) == ("D", 5)
    assert dynkin_type(dynkin_algebra("E", 6)) == ("E", 6)
    assert dynkin_type(builtin("eje1a")) is None
    assert dynkin_type(builtin("a4cx")) == ("A", 4)


def test_single_orientation_e6():
    res = dynkin_index("E", 6)
    assert res.ok and res.r == 11 and res.nodes == 36 and res.vertex_r == 10


@pytest.mark.parametrize("kind,n,count", [("A", 4, 8), ("D", 4, 8), ("D", 5, 16)])
def test_orientation_sweeps(kind, n, count):
    rep = orientation_sweep(kind, n)
    assert len(rep.rows) == count
    assert rep.ok and rep.invariant


def test_e8_defaults_to_one_orientation():
    assert orientation_sweep.__defaults__[0] is None


def test_chain_ejemplo1a():
    rep = tilt_chain(builtin("ejemplo1a"), [5, 4, 3, 5, 4, 5])
    assert rep.indices == [5] * 7
    assert rep.final_type == ("A", 5) and rep.bound == 5 and rep.ok


def test_chain_ejemplo1b():
    rep = tilt_chain(builtin("ejemplo1b"), [5, 4, 5, 3, 4, 5, 4])
    assert rep.indices[0] == 4 and rep.final_type == ("A", 5)
    assert rep.within_bound and rep.monotone


def test_chain_aprsix():
    rep = tilt_chain(builtin("aprsix"), ["1"])
    assert rep.indices == [7, 8]
    assert rep.final_type is None and rep.within_bound is None


def test_empty_chain():
    rep = tilt_chain(builtin("a4cx"), [])
    assert rep.indices == [4] and rep.bound == 4 and rep.ok


def test_chain_bad_sink():
    with pytest.raises(ChainError) as exc:
        tilt_chain(builtin("eje1a"), ["4", "1"])
    assert exc.value.stage == 2 and exc.value.sink == "1"


def test_registry_has_all_claims():
    for cid in ["Tsep", "Tsepdual", "BBcompos", "BBirred", "TheoremA", "propinc", "nopozo", "nofuente",
                "APRgral", "APRlibre", "nilpo", "camiglar", "ctdir", "clau2.5", "inclite", "Hap"]:
        assert cid in CLAIMS


def test_unknown_claim():
    with pytest.raises(UnknownClaimError):
        verify("nosuch", "eje1a")


def test_theorem_a_on_eje1a():
    rep = verify("TheoremA", "eje1a")
    assert rep.status == VERIFIED
    assert rep.metrics["r_A"] == 4 and rep.metrics["r_B"] == 5


def test_converse_guard_on_eje1a():
    rep = verify("propinc-converse-guard", "eje1a")
    assert rep.status == VERIFIED
    assert rep.metrics["u"] == "3" and 3 in rep.metrics["path_lengths"]


def test_separating_claims_on_eje1a():
    for cid in ["Tsep", "Tsepdual"]:
        assert verify(cid, "eje1a").status == VERIFIED
    # not splitting: the reflecting statements do not apply
    assert verify("BBcompos", "eje1a").status == INAPPLICABLE


def test_ctdir_on_a3():
    rep = verify("ctdir", dynkin_algebra("A", 3))
    assert rep.status == VERIFIED


def test_chain_contract_inapplicable_off_dynkin():
    inst = resolve_instance("aprsix", chain=["1"])
    assert verify("Ha6.2-chain-contract", inst).status == INAPPLICABLE


def test_hereditary_propinc_iff():
    for name, A in corpus(include_builtins=False):
        if A.relations or len(A.vertices) > 4:
            continue
        rep = hereditary_propinc_iff(A)
        assert rep.status != REFUTED, (name, rep.detail)
    rep = hereditary_propinc_iff(resolve_instance("a4cx"))
    assert rep.status != REFUTED


def test_report_json_is_timing_free_by_default():
    rep = verify("nilpo", "eje1a")
    assert "seconds" not in rep.to_json()
    assert "seconds" in rep.to_json(timing=True)
