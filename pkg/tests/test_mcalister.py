from __future__ import annotations

import json

import pytest

from invconj import catalog
from invconj import mcalister as mc
from invconj.conjugacy import iconj_matrix, is_e_unitary
from invconj.mcalister import PElement as E
from invconj.table import validate_inverse

VALID = catalog.valid_triples()


def triple(d):
    return mc.McAlisterTriple.from_json(d)


@pytest.mark.parametrize("name", list(VALID))
def test_valid_triples(name):
    assert mc.validate_triple(triple(VALID[name])).valid


def test_missing_bottom_reports_meet_missing():
    rep = mc.validate_triple(triple(catalog.triple_z2_no_bottom()))
    assert not rep.valid
    first = rep.violations[0]
    assert isinstance(first, mc.MeetMissing) and first.pair == ("p", "q")
    assert any(isinstance(v, mc.NotOrderIdeal) for v in rep.violations)
    with pytest.raises(mc.MeetMissing):
        mc.export_table(triple(catalog.triple_z2_no_bottom()))


def test_non_automorphism_detected():
    d = catalog.triple_z2_swap()
    d["action"]["s"] = {"b": "p", "p": "b", "q": "q"}
    rep = mc.validate_triple(triple(d))
    assert any(isinstance(v, mc.NotOrderAutomorphism) for v in rep.violations)


def test_coverage_failure():
    d = catalog.triple_z2_swap()
    d["action"]["s"] = {"b": "b", "p": "p", "q": "q"}
    d["ideal"] = ["b", "p"]
    rep = mc.validate_triple(triple(d))
    assert [v.what for v in rep.violations if isinstance(v, mc.CoverageFailure)] == ["q"]


def test_bad_group_and_poset():
    d = catalog.triple_trivial_chain()
    d["group"] = catalog.left_zero().to_json()
    assert isinstance(mc.validate_triple(triple(d)).violations[0], mc.NotAGroup)
    d = catalog.triple_trivial_chain()
    d["poset"]["leq"] = [[True, True], [True, True]]
    assert isinstance(mc.validate_triple(triple(d)).violations[0], mc.BadPoset)


def test_malformed_json():
    with pytest.raises(mc.MalformedTriple):
        mc.McAlisterTriple.from_json({"group": catalog.triple_trivial_chain()["group"]})


def test_trivial_chain_is_the_chain():
    t = triple(VALID["trivial-chain"])
    ct = mc.export_table(t)
    assert ct.n == 2 and len(ct.idempotents) == 2
    assert ct.table.tolist() == catalog.chain_semilattice(2).table.tolist()


def test_z2_swap_elements_and_product():
    t = triple(VALID["z2-swap"])
    elems = mc.p_elements(t)
    assert len(elems) == 6
    assert set(elems) == {E(a, g) for a in "bpq" for g in "1s"}
    assert mc.p_mul(t, E("p", "1"), E("q", "1")) == E("b", "1")


def test_z2_half_has_three_elements():
    t = triple(VALID["z2-half"])
    assert set(mc.p_elements(t)) == {E("b", "1"), E("p", "1"), E("b", "s")}


@pytest.mark.parametrize("name", list(VALID))
def test_export_is_inverse_and_e_unitary(name):
    t = triple(VALID[name])
    ct = mc.export_table(t)
    assert validate_inverse(ct).valid and is_e_unitary(ct)
    elems = mc.p_elements(t)
    for i, u in enumerate(elems):
        assert ct.inverse[i] == elems.index(mc.p_inverse(t, u))
    idem = {elems[i] for i in ct.idempotents}
    one = t.group.elements[t.group.identity]
    assert idem == {E(a, one) for a in t.ideal}


@pytest.mark.parametrize("name", list(VALID))
def test_criterion_matches_brute_force(name):
    t = triple(VALID[name])
    assert mc.p_conjugacy_agrees(t) == []


def test_conjugacy_examples():
    t = triple(VALID["z2-swap"])
    r = mc.p_conjugate(t, E("b", "1"), E("b", "1"))
    assert r and r.witness == E("b", "1")
    ct = mc.export_table(t)
    M = iconj_matrix(ct)
    elems = mc.p_elements(t)
    u, v = E("p", "1"), E("q", "1")
    assert bool(mc.p_conjugate(t, u, v)) == bool(M[elems.index(u), elems.index(v)]) is True
    # group parts 1 and s are not conjugate in Z2
    assert not mc.p_conjugate(t, E("p", "1"), E("p", "s"))


def test_reflexive_pair_via_adjoined_identity():
    t = triple(VALID["z2-swap"])
    r = mc.p_conjugate(t, E("p", "s"), E("p", "s"))
    assert r and r.via_identity and r.witness is None


def test_conj_rejects_non_elements():
    t = triple(VALID["z2-half"])
    with pytest.raises(mc.MalformedTriple):
        mc.p_conjugate(t, E("q", "1"), E("b", "1"))


def test_parse_pelement():
    assert mc.parse_pelement(" (p, s) ") == E("p", "s")
    with pytest.raises(mc.MalformedTriple):
        mc.parse_pelement("p,s")


def test_load_from_file(tmp_path):
    p = tmp_path / "t.json"
    p.write_text(json.dumps(VALID["z2-swap"]))
    assert mc.validate_triple(mc.load_triple(p)).valid
