"""Worked examples.

``dp6``: C_N acting on P^2 by (x:y:z) -> (x : z^a y : z^b z); blow up the
three fixed points to reach the degree-6 del Pezzo surface, contract the
three coordinate lines, land on another P^2.

``lsh``: a C_5-equivariant birational automorphism of P^3 through a quadric
threefold, with all divisors given by opaque labels.

``coarsening``: a toric map at N = 5 whose equivariant invariant is nonzero
while the orbifold invariant vanishes.
"""

from collections import Counter, deque
from math import gcd

from birburn.classes import (
    Opaque,
    class_of,
    relabel_group_automorphism,
)
from birburn.ledger import (
    C_G,
    C_orb,
    ScriptedDivisor,
    ScriptedMap,
    ToricMap,
    c_classical,
    ledger,
    ledger_report,
    sum_json,
)
from birburn.toric import P2, Down, Embedding, Up, apply_move, cone_weights, legal_moves


class ScenarioError(ValueError):
    pass


DP6_WORD = (Up(0), Up(2), Up(4), Down((1, 0)), Down((0, 1)), Down((-1, -1)))


def _pairs(pairs, N):
    return Counter(tuple(sorted((x % N, y % N))) for x, y in pairs)


def dp6_patterns(N, a, b):
    before = [(a, b), (-a, b - a), (-b, a - b)]
    after = [(-a, -b), (a, a - b), (b, b - a)]
    return _pairs(before, N), _pairs(after, N)


def scenario_dp6(N, a, b):
    if N < 2:
        raise ScenarioError("N >= 2 required")
    if a % N == 0 or b % N == 0:
        raise ScenarioError("a, b != 0 (mod N) required")
    if (a - b) % N == 0:
        raise ScenarioError("a ≠ b required")
    if gcd(gcd(a, b), N) != 1:
        raise ScenarioError("gcd(a, b, N) = 1 required for a faithful action")
    e = Embedding(N, a, b)
    m = ToricMap(P2, DP6_WORD, e)
    fan_after = m.fan_y
    w_before = [tuple(c.value for c in cone_weights(P2, i, e)) for i in range(3)]
    w_after = [tuple(c.value for c in cone_weights(fan_after, i, e)) for i in range(3)]
    exp_before, exp_after = dp6_patterns(N, a, b)
    cls_before = class_of(P2, e)
    cls_after = class_of(fan_after, e)
    relabelled = relabel_group_automorphism(cls_after, -1)
    checks = {
        "weights_before_match": _pairs(w_before, N) == exp_before,
        "weights_after_match": _pairs(w_after, N) == exp_after,
        "relabel_minus_one": relabelled == cls_before,
    }
    return {
        "scenario": "dp6",
        "N": N, "a": a % N, "b": b % N,
        "word": [str(mv) for mv in DP6_WORD],
        "fan_before": [list(r) for r in P2.rays],
        "fan_after": [list(r) for r in fan_after.rays],
        "weights_before": [list(w) for w in w_before],
        "weights_after": [list(w) for w in w_after],
        "class_before": sum_json(cls_before),
        "class_after": sum_json(cls_after),
        "class_after_relabelled": sum_json(relabelled),
        "ledger": ledger_report(m),
        "checks": checks,
        "ok": all(checks.values()),
    }


# --------------------------------------------------------------- lsh

LSH_N = 5


def _div(name, equiv, bir):
    return ScriptedDivisor(
        name=name,
        equiv_class=Opaque(f"[{equiv} / C5]"),
        orbifold_class=Opaque(f"[{equiv} / C5] (stack)"),
        bir_class=Opaque(bir),
    )


def lsh_maps(identify=False):
    """(psi2^-1, psi1, phi) as scripted maps.

    psi2: Q -> P^3 is projection from a fixed point x in Q; psi1: Q -> P^3
    blows up C and contracts a divisor onto J^2(C).  phi = psi1 o psi2^-1.
    ``identify`` gives J^2(C) the label of C and the contracted cone the
    label of the plane, as a cancellation control.
    """
    c_lab = "ruled surface over C"
    j_lab = c_lab if identify else "ruled surface over J2(C)"
    plane_lab = "plane over x"
    cone_lab = plane_lab if identify else "cone over conic"
    # C and J^2(C) are isomorphic genus-1 curves once equivariance is forgotten
    ruled, rational = "E x P1", "P2"
    plane = _div("plane contracted to x", plane_lab, rational)
    cone = _div("cone T_xQ ∩ Q contracted to a conic", cone_lab, rational)
    over_c = _div("exceptional divisor over C", c_lab, ruled)
    over_j = _div("divisor contracted to J2(C)", j_lab, ruled)
    psi2_inv = ScriptedMap((plane,), (cone,), 3, LSH_N)
    psi1 = ScriptedMap((over_j,), (over_c,), 3, LSH_N)
    phi = ScriptedMap((plane, over_j), (cone, over_c), 3, LSH_N)
    return psi2_inv, psi1, phi


def scenario_lsh(identify=False):
    psi2_inv, psi1, phi = lsh_maps(identify)
    cg = C_G(phi)
    return {
        "scenario": "lsh",
        "N": LSH_N,
        "identify_labels": identify,
        "entries": [en.to_json() for en in ledger(phi)],
        "C_G": sum_json(cg),
        "C_orb": sum_json(C_orb(phi)),
        "c": sum_json(c_classical(phi)),
        "C_G_nonzero": bool(cg),
        "checks": {"C_G_additive_over_factors": C_G(psi2_inv) + C_G(psi1) == cg},
        "ok": C_G(psi2_inv) + C_G(psi1) == cg,
    }


# ---------------------------------------------------------- coarsening


def find_coarsening_word(e, max_depth=6, max_rays=7):
    """Shortest word from P^2 with C_G != 0 and C_orb == 0 (BFS, fixed order)."""
    queue = deque([(P2, ())])
    seen = {P2.ray_set()}
    while queue:
        f, word = queue.popleft()
        if word:
            m = ToricMap(P2, word, e)
            if C_G(m) and not C_orb(m):
                return m
        if len(word) == max_depth:
            continue
        for mv in legal_moves(f):
            g = apply_move(f, mv)
            if len(g) > max_rays or g.ray_set() in seen:
                continue
            seen.add(g.ray_set())
            queue.append((g, word + (mv,)))
    return None


def scenario_coarsening(N=5, p=1, q=2):
    e = Embedding(N, p, q)
    m = find_coarsening_word(e)
    if m is None:
        raise ScenarioError(f"no coarsening example within the search bounds for {e}")
    return {
        "scenario": "coarsening",
        "N": N, "embedding": [e.p, e.q],
        "word": [str(mv) for mv in m.word],
        "ledger": ledger_report(m),
        "ok": bool(C_G(m)) and not C_orb(m),
    }
