from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from birburn.chars import FaithfulCharLabel
from birburn.classes import (
    EquivCurveClass,
    NontrivialStabilizer,
    OrbifoldCurveSignature,
    class_of,
    divisor_class_equivariant,
    divisor_class_orbifold,
    relabel_group_automorphism,
)
from birburn.presentation import build_presentation, reduce
from birburn.symbols import (
    CurveSymbol,
    FormalSum,
    FreeSymbol,
    PointSymbol,
    RationalCurve,
    project_nontrivial,
)
from birburn.toric import P2, Embedding, blow_up, hirzebruch, ray_data

from helpers import embeddings, fans


def test_p2_class(e512):
    assert class_of(P2, e512) == FormalSum.of(
        PointSymbol(5, 5, 1, 2), PointSymbol(5, 5, 1, 4), PointSymbol(5, 5, 3, 4),
        FreeSymbol(5, "T2"))


def test_class_with_stabilized_curve():
    e = Embedding(4, 1, 2)
    assert class_of(P2, e) == FormalSum.of(
        CurveSymbol(4, 2, 1, RationalCurve(FaithfulCharLabel(2, 1))),
        PointSymbol(4, 4, 1, 2), PointSymbol(4, 4, 1, 3), PointSymbol(4, 4, 2, 3),
        FreeSymbol(4, "T2"))


def test_curve_fixed_by_whole_group_absorbs_its_points():
    e = Embedding(2, 0, 1)
    assert ray_data((0, 1), e).stab_order == 2
    assert class_of(P2, e) == FormalSum.of(
        PointSymbol(2, 2, 1, 1),
        CurveSymbol(2, 2, 1, RationalCurve(FaithfulCharLabel(1, 0))),
        FreeSymbol(2, "T2"))


@given(fans(), embeddings())
def test_symbol_counts(f, e):
    cls = class_of(f, e)
    data = [ray_data(v, e) for v in f.rays]
    n = len(f)
    curves = sum(1 for d in data if d.stab_order > 1)
    points = sum(1 for i in range(n)
                 if data[i].stab_order < e.N and data[(i + 1) % n].stab_order < e.N)
    kinds = {"pt": 0, "crv": 0, "free": 0}
    for t, c in cls.items():
        kinds[str(t).split("(")[0]] += c
    assert kinds == {"pt": points, "crv": curves, "free": 1}


@given(fans(), embeddings(), st.data())
def test_relabel_equals_scaled_embedding(f, e, data):
    units = [u for u in range(1, max(e.N, 2)) if gcd(u, e.N) == 1]
    u = data.draw(st.sampled_from(units))
    scaled = Embedding(e.N, u * e.p, u * e.q)
    assert relabel_group_automorphism(class_of(f, e), u) == class_of(f, scaled)


@given(fans(), embeddings(max_N=12), st.data())
def test_relabel_is_an_action(f, e, data):
    units = [u for u in range(1, max(e.N, 2)) if gcd(u, e.N) == 1]
    u, v = data.draw(st.sampled_from(units)), data.draw(st.sampled_from(units))
    s = class_of(f, e)
    assert relabel_group_automorphism(relabel_group_automorphism(s, u), v) == \
        relabel_group_automorphism(s, u * v)
    assert relabel_group_automorphism(s, 1) == s


def test_relabel_rejects_non_units():
    with pytest.raises(ValueError):
        relabel_group_automorphism(class_of(P2, Embedding(6, 1, 2)), 2)


@settings(max_examples=60)
@given(fans(), embeddings(max_N=12).filter(lambda e: e.N >= 2), st.data())
def test_blowup_invariance(f, e, data):
    i = data.draw(st.integers(0, len(f) - 1))
    diff = project_nontrivial(class_of(blow_up(f, i), e) - class_of(f, e))
    assert reduce(diff, build_presentation(e.N)).is_zero


def test_divisor_classes(e512):
    assert divisor_class_equivariant((1, 1), e512) == EquivCurveClass(5, FaithfulCharLabel(5, 1))
    assert divisor_class_orbifold((1, 1), e512) == OrbifoldCurveSignature(0, (5, 5))
    e = Embedding(4, 1, 2)
    assert divisor_class_equivariant((1, 0), e) == NontrivialStabilizer(2)
    assert divisor_class_orbifold((1, 0), e) == NontrivialStabilizer(2)
    assert divisor_class_orbifold((1, 0), Embedding(1, 0, 0)) == OrbifoldCurveSignature(0, ())


def test_label_and_signature_validation():
    with pytest.raises(ValueError):
        EquivCurveClass(6, FaithfulCharLabel(3, 1))
    with pytest.raises(ValueError):
        OrbifoldCurveSignature(0, (1, 5))
    assert str(OrbifoldCurveSignature(0, (5, 5))) == "(g=0; {5, 5})"


@given(fans(), st.sampled_from([2, 3, 5, 7]), st.data())
def test_prime_order_signatures_coincide(f, N, data):
    # at prime N every trivial-stabilizer boundary curve has the same signature
    p, q = data.draw(st.integers(0, N - 1)), data.draw(st.integers(0, N - 1))
    if (p, q) == (0, 0):
        p = 1
    e = Embedding(N, p, q)
    sigs = {divisor_class_orbifold(v, e) for v in f.rays if ray_data(v, e).stab_order == 1}
    assert sigs <= {OrbifoldCurveSignature(0, (N, N))}


def test_class_of_hirzebruch(e512):
    cls = class_of(hirzebruch(0), e512)
    assert cls.coefficient_sum() == 5
