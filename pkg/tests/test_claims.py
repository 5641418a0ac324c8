"""Tests for the claim registry, parameter search, and obstruction solver."""

import json

import pytest

from sympgen import claims
from sympgen.anchors import ANCHORS
from sympgen.construct import GeneratorPair, SympSpace, build
from sympgen.errors import OddCharacteristic, UnknownClaim, UnknownLemma
from sympgen.gf import standard_field
from sympgen.matrix import Mat


# ---------------------------------------------------------------------------
# registry basics
# ---------------------------------------------------------------------------

REQUIRED_IDS = [
    "prop-q2-n6", "prop-q2-n7", "prop-q2-n8", "prop-q2-n9", "prop-q2-n11",
    "prop-q2-sl9", "lemma-q4", "main10-q7", "main12-q3", "main12-q5",
    "main14-q7", "charpoly-n4", "main4-chi-xy", "main4-w-eigenvectors",
    "main4-cube-dim6", "main4-c-order-q3", "main4-c-order-q5",
    "main5-chi-eta", "main5-tau-dim8", "main5-trace", "main5-q4", "main5-q25",
    "main6-q3", "main6-q9", "trace6", "main6-tau-dim10", "main6-chi-comm",
    "main7-q3", "main7-q4", "main7-q7", "main7-q8", "main7-q16",
    "main7-chi-eta", "main7-tau-charpoly",
    "main8-q3", "main8-q5", "main8-q9", "main8-chi-eta", "main8-phat-conj",
    "main8-tau-relations",
    "main9-q3", "main9-q4", "main9-q5", "main9-q7", "main9-q8",
    "main9-tau-charpoly", "main9-ytau-even", "des-tau-n9",
    "main11-q3", "main11-q4", "main11-q5", "main11-chi-eta",
    "main11-tau-bireflection",
    "G7-q8", "G9", "G9-10", "G9-12", "G9-14", "K9", "K9even", "K9odd",
    "G11", "Gn11", "WSL6-q3", "WSL6-q5", "WSL6-q7", "phat-centralizes",
    "G3-action", "s-sigma", "theta-charpoly", "remark-q7",
    "block-orders-n10", "block-orders-n12", "block-orders-n13",
    "block-orders-n14", "block-orders-n15",
    "quadform-n4", "quadform-n5", "quadform-n6", "quadform-n7",
    "quadform-n8", "quadform-n9", "quadform-n11",
    "subfield", "subfield5", "subfield6", "subfield7", "subfield8",
    "subfield9-2", "subfield9-odd", "subfield11",
]


def test_registry_covers_required_ids():
    ids = set(claims.claim_ids())
    missing = [i for i in REQUIRED_IDS if i not in ids]
    assert missing == []


def test_unknown_claim_raises():
    with pytest.raises(UnknownClaim):
        claims.run_claim("no-such-claim")


def test_prop_q2_filter_matches_exactly_six():
    results = claims.run_all("prop-q2-*", threads=1)
    assert len(results) == 6
    assert all(r.status == "Pass" for r in results)


def test_run_claim_statuses():
    assert claims.run_claim("prop-q2-n8").status == "Pass"
    assert claims.run_claim("charpoly-n4").status == "Pass"
    assert claims.run_claim("main4-c-order-q3").status == "OpenQuestionResolved"


def test_paper_ref_quotes_match_anchor_table():
    for cid in claims.claim_ids():
        ref = claims._REGISTRY[cid].paper_ref
        assert ref["quote"] == ANCHORS[ref["label"]]


# ---------------------------------------------------------------------------
# run_all and the JSON report
# ---------------------------------------------------------------------------

def test_run_all_idempotent_and_order_independent():
    subset = "subfield*"
    first = claims.report_json(claims.run_all(subset, threads=1))
    second = claims.report_json(claims.run_all(subset, threads=4))
    assert first == second


def test_report_json_structure():
    results = claims.run_all("quadform-n4", threads=1)
    payload = json.loads(claims.report_json(results))
    assert isinstance(payload, list) and len(payload) == 1
    entry = payload[0]
    for key in ("id", "status", "expected", "computed", "wall_time_ms",
                "paper_ref"):
        assert key in entry
    assert entry["status"] in ("Pass", "Fail", "OpenQuestionResolved")


def test_report_json_stable_mode_is_byte_stable():
    a = claims.report_json(claims.run_all("theta-charpoly", threads=1))
    b = claims.report_json(claims.run_all("theta-charpoly", threads=1))
    assert a == b


# ---------------------------------------------------------------------------
# parameter search
# ---------------------------------------------------------------------------

def test_search_unknown_lemma():
    with pytest.raises(UnknownLemma):
        claims.search_parameter("no-such-lemma", 7)


def test_search_g9_empty_at_q7():
    assert claims.search_parameter("G9", 7) == []


def test_search_meh_contains_one_at_q7():
    field = standard_field(7)
    found = claims.search_parameter("M=H", 7, field)
    assert field.elem(1) in found


def test_search_g9_10_contains_tagged_root_at_q9():
    # the named a for q=9 has minimal polynomial t^2 + t + 2 over F_3
    want = claims.named_a_value("G9-10", 9)
    found = claims.search_parameter("G9-10", 9)
    assert want in found
    assert claims.min_poly_coeffs(want) == (2, 1, 1)


def test_search_respects_characteristic_split():
    # even-characteristic lemma yields nothing over an odd field and
    # vice versa
    assert claims.search_parameter("G11", 5) == []
    assert claims.search_parameter("Gn11", 8) == []


# ---------------------------------------------------------------------------
# quadratic-form obstruction solver
# ---------------------------------------------------------------------------

def test_obstruction_rejects_odd_characteristic():
    pair = claims._pair(4, 3, "general", 1)
    with pytest.raises(OddCharacteristic):
        claims.quadratic_form_obstruction(pair)


def _identity_pair(n, q):
    field = standard_field(q)
    space = SympSpace.make(n, field)
    ident = Mat.identity(field, 2 * n)
    return GeneratorPair(space=space, x=ident, y=ident, n=n, q=q,
                         a=field.elem(1), recipe="general")


def test_obstruction_identity_pair_form_found():
    res = claims.quadratic_form_obstruction(_identity_pair(3, 2))
    assert res.kind == "FormFound"


def test_obstruction_orthogonal_fixture_form_found():
    # generators preserving the split quadratic form Q(e_i) = 0,
    # Q(v) = v1 v3 + v2 v4 on a 4-dimensional space over F_2:
    # they must admit a form, so the solver reports FormFound
    field = standard_field(2)
    space = SympSpace.make(2, field)
    # swap e_1 <-> e_2 and e_{-1} <-> e_{-2}; and a transvection-like map
    g1 = Mat(field, [[0, 1, 0, 0], [1, 0, 0, 0],
                     [0, 0, 0, 1], [0, 0, 1, 0]])
    g2 = Mat(field, [[1, 0, 0, 1], [0, 1, 1, 0],
                     [0, 0, 1, 0], [0, 0, 0, 1]])
    assert space.is_symplectic(g1) and space.is_symplectic(g2)
    pair = GeneratorPair(space=space, x=g1, y=g2, n=2, q=2,
                         a=field.elem(1), recipe="general")
    res = claims.quadratic_form_obstruction(pair)
    assert res.kind == "FormFound"
    # the found form is really invariant under both generators
    vals = res.values

    def Q(v):
        acc = 0
        for i, c in enumerate(v):
            acc = field.add(acc, field.mul(field.mul(c, c), vals[i]))
        for i in range(4):
            for j in range(i + 1, 4):
                acc = field.add(acc, field.mul(field.mul(v[i], v[j]),
                                               space.J[(i, j)]))
        return acc
    import itertools
    for v in itertools.product(range(2), repeat=4):
        for g in (g1, g2):
            assert Q(tuple(g.apply(v))) == Q(v)


def test_obstruction_full_sp_inconsistent():
    pair = claims._pair(6, 2, "general", 1)
    assert claims.quadratic_form_obstruction(pair).kind == "Inconsistent"


# ---------------------------------------------------------------------------
# word evaluation
# ---------------------------------------------------------------------------

def test_eval_word_matches_direct_products():
    pair = claims._pair(4, 3, "general", 1)
    env = {"x": pair.x, "y": pair.y}
    w = claims.mul(claims.pw(claims.XY, 3), claims.Y)
    assert claims.eval_word(w, env) == (pair.x * pair.y) ** 3 * pair.y
    c = claims.eval_word(claims.COMM, env)
    assert c == pair.commutator()
    conj = claims.eval_word(claims.cj(claims.X, claims.Y), env)
    assert conj == pair.y.inverse() * pair.x * pair.y
    inv = claims.eval_word(claims.inv(claims.Y), env)
    assert inv == pair.y.inverse()


def test_certify_default_words():
    from sympgen.grouporder import Certificate
    assert claims.certify_pair(6, 2) == Certificate.Certified
    with pytest.raises(UnknownLemma):
        claims.certify_pair(4, 3)
