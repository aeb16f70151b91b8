import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from birburn.oracle import naive_invariant_factors
from birburn.presentation import build_presentation, reduce, relation_matrix_dense
from birburn.symbols import (
    TRIVIAL_P1,
    CurveSymbol,
    FormalSum,
    FreeSymbol,
    OpaqueCurve,
    PointSymbol,
    blowup_rhs,
)


def test_order_two_is_trivial():
    q = build_presentation(2)
    assert q.is_trivial()
    assert q.group_string() == "trivial"
    assert len(q.generators) == 2


@pytest.mark.parametrize("N", range(2, 13))
def test_presentation_matches_oracle(N):
    q = build_presentation(N)
    assert (q.invariant_factors, q.snf.rank) == naive_invariant_factors(relation_matrix_dense(q))


@pytest.mark.parametrize("N", [3, 5, 7, 12])
def test_relations_reduce_to_zero(N):
    q = build_presentation(N)
    for k in range(len(q.relations)):
        assert reduce(q.relation_sum(k), q).is_zero


def test_vanishing_and_blowup_in_the_quotient():
    q = build_presentation(5)
    assert reduce(FormalSum.of(PointSymbol(5, 5, 1, 4)), q).is_zero
    p = PointSymbol(5, 5, 1, 2)
    assert reduce(FormalSum.of(p) - blowup_rhs(p), q).is_zero
    assert not reduce(FormalSum.of(PointSymbol(5, 5, 1, 1)), q).is_zero


def test_opaque_and_free_pass_through():
    q = build_presentation(5)
    s = FormalSum.of(CurveSymbol(5, 5, 1, OpaqueCurve("E")), FreeSymbol(5, "T2"))
    red = reduce(s, q)
    assert not red.is_zero
    assert red.passthrough == s
    assert all(x == 0 for x in red.coordinates())


def test_reduce_rejects_foreign_symbols():
    with pytest.raises(ValueError):
        reduce(FormalSum.of(PointSymbol(6, 6, 1, 1)), build_presentation(5))
    with pytest.raises(ValueError):
        build_presentation(1)


@given(st.integers(3, 12), st.data())
def test_reduce_is_linear(N, data):
    q = build_presentation(N)
    gens = st.sampled_from(q.generators)
    s = FormalSum.of(*data.draw(st.lists(gens, max_size=6)))
    t = FormalSum.of(*data.draw(st.lists(gens, max_size=6)))
    rs, rt, rst = reduce(s, q), reduce(t, q), reduce(s + t, q)
    for (d, a), (_, b), (_, c) in zip(rs.torsion, rt.torsion, rst.torsion):
        assert (a + b) % d == c
    assert [a + b for a, b in zip(rs.free, rt.free)] == rst.free


def test_json_is_deterministic():
    a = json.dumps(build_presentation(6).to_json(), sort_keys=True)
    build_presentation.cache_clear()
    b = json.dumps(build_presentation(6).to_json(), sort_keys=True)
    assert a == b
    doc = json.loads(a)
    assert doc["relations"]["shape"][1] == len(doc["generators"])
    assert doc["generators"][-1].startswith("crv(")


def test_group_strings():
    assert build_presentation(3).group_string() == "Z"
    assert build_presentation(7).group_string() == "Z/2 x Z^3"
    q = build_presentation(2)
    assert reduce(FormalSum.of(CurveSymbol(2, 2, 1, TRIVIAL_P1)), q).is_zero
