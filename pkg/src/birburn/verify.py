"""Seeded randomized property harnesses shared by the CLI and the tests.

Every trial draws from its own ``random.Random`` seeded with the string
``"{seed}:{kind}:{trial}"`` (string seeds hash through SHA-512, so runs are
reproducible across processes and platforms).
"""

import random
from fractions import Fraction
from math import gcd

from birburn.classes import class_of
from birburn.ledger import (
    INVARIANTS,
    ToricMap,
    compose,
    exceptional_sets,
    factorization,
    inverse,
)
from birburn.oracle import naive_invariant_factors
from birburn.presentation import build_presentation, reduce, relation_matrix_dense
from birburn.snf import is_smith_form, matmul, smith_normal_form
from birburn.symbols import project_nontrivial
from birburn.toric import (
    P2,
    Down,
    Embedding,
    Up,
    apply_move,
    blow_up,
    contractible_rays,
    hirzebruch,
)

N_POOL = (2, 3, 4, 5, 6, 8, 12)


def trial_rng(seed, kind, trial):
    return random.Random(f"{seed}:{kind}:{trial}")


def random_embedding(rng, N):
    while True:
        p, q = rng.randrange(N), rng.randrange(N)
        if gcd(gcd(p, q), N) == 1:
            return Embedding(N, p, q)


def random_word(rng, f, length, max_rays=9):
    """Word of ``length`` legal moves, roughly half blow-downs when possible."""
    word = []
    for _ in range(length):
        downs = contractible_rays(f)
        if downs and (len(f) >= max_rays or rng.random() < 0.5):
            mv = Down(rng.choice(downs))
        else:
            mv = Up(rng.randrange(len(f)))
        word.append(mv)
        f = apply_move(f, mv)
    return tuple(word), f


def random_fan(rng, max_steps=4):
    start = rng.choice([P2, hirzebruch(0), hirzebruch(1), hirzebruch(2)])
    _, f = random_word(rng, start, rng.randrange(max_steps + 1))
    return f


def random_map(rng, fan=None, emb=None, max_len=6):
    N = emb.N if emb else rng.choice(N_POOL)
    e = emb or random_embedding(rng, N)
    f = fan or random_fan(rng)
    word, _ = random_word(rng, f, rng.randrange(max_len + 1))
    return ToricMap(f, word, e)


# ------------------------------------------------------------------ checks


def check_composition(rng):
    m1 = random_map(rng)
    m2 = random_map(rng, fan=m1.fan_y, emb=m1.emb)
    m = compose(m1, m2)
    failures = [name for name, inv in INVARIANTS.items() if inv(m) != inv(m1) + inv(m2)]
    return not failures, {"N": m1.emb.N, "len1": len(m1.word), "len2": len(m2.word),
                          "failed": failures}


def check_antisymmetry(rng):
    m = random_map(rng)
    mi = inverse(m)
    failures = [name for name, inv in INVARIANTS.items() if inv(mi) != -inv(m)]
    return not failures, {"N": m.emb.N, "len": len(m.word), "failed": failures}


def check_blowup_invariance(rng):
    N = rng.choice(N_POOL)
    e = random_embedding(rng, N)
    f = random_fan(rng)
    i = rng.randrange(len(f))
    diff = project_nontrivial(class_of(blow_up(f, i), e) - class_of(f, e))
    red = reduce(diff, build_presentation(N))
    return red.is_zero, {"N": N, "embedding": [e.p, e.q], "fan": [list(r) for r in f.rays],
                         "cone": i, "difference": str(diff)}


def check_lemma_step1(rng):
    m = random_map(rng)
    ex = exceptional_sets(m)
    X, Y = m.fan_x.ray_set(), m.fan_y.ray_set()
    sigma, tau = factorization(m)
    ex_s, ex_t = exceptional_sets(sigma), exceptional_sets(tau)
    checks = {
        "Ex(sigma^-1) empty": not ex.ex_sigma_inv and not ex_s.ex_phi_inv,
        "Ex(tau^-1) empty": not ex.ex_tau_inv and not ex_t.ex_phi_inv,
        "Ex(phi) = Ex(tau) - Ex(sigma)": ex_t.ex_phi - ex_s.ex_phi == X - Y == ex.ex_phi,
        "Ex(phi^-1) = Ex(sigma) - Ex(tau)": ex_s.ex_phi - ex_t.ex_phi == Y - X == ex.ex_phi_inv,
    }
    for name, inv in INVARIANTS.items():
        checks[f"{name}(phi) = -{name}(sigma) + {name}(tau)"] = inv(m) == -inv(sigma) + inv(tau)
    failed = [k for k, ok in checks.items() if not ok]
    return not failed, {"N": m.emb.N, "len": len(m.word), "failed": failed}


def check_bookkeeping(rng):
    m = random_map(rng)
    lhs = INVARIANTS["c"](m).coefficient_sum()
    rhs = len(m.fan_y) - len(m.fan_x)
    return lhs == rhs, {"coefficient_sum": lhs, "picard_change": rhs}


def bareiss_det(M):
    n = len(M)
    if n == 0:
        return 1
    A = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            det = -det
        det *= A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] / A[k][k]
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
    return int(det)


def snf_consistent(A, ncols):
    """SNF of A vs oracle, plus U A V = D and unimodularity."""
    snf = smith_normal_form(A, ncols)
    inv, rank = naive_invariant_factors(A)
    ok = snf.invariant_factors == inv and snf.rank == rank and is_smith_form(snf.diagonal)
    if A and ncols:
        ok = ok and matmul(matmul(snf.dense_U(), A), snf.dense_V()) == snf.dense_D()
        ok = ok and abs(bareiss_det(snf.dense_U())) == 1 and abs(bareiss_det(snf.dense_V())) == 1
    return ok, {"snf": snf.invariant_factors, "oracle": inv, "rank": [snf.rank, rank]}


def check_snf_oracle(rng):
    N = rng.randrange(2, 13)
    q = build_presentation(N)
    inv, rank = naive_invariant_factors(relation_matrix_dense(q))
    ok = q.invariant_factors == inv and q.snf.rank == rank
    m, n = rng.randrange(1, 7), rng.randrange(1, 7)
    A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
    ok2, detail = snf_consistent(A, n)
    return ok and ok2, {"N": N, "presentation": [q.invariant_factors, inv],
                        "random_matrix": A, **detail}


CHECKS = {
    "composition": check_composition,
    "blowup-invariance": check_blowup_invariance,
    "lemma-step1": check_lemma_step1,
    "snf-oracle": check_snf_oracle,
    "antisymmetry": check_antisymmetry,
    "bookkeeping": check_bookkeeping,
}


def run_verify(kind, trials, seed):
    if kind not in CHECKS:
        raise ValueError(f"unknown property {kind!r}; choose from {sorted(CHECKS)}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    check = CHECKS[kind]
    failures = []
    passed = 0
    for t in range(trials):
        ok, detail = check(trial_rng(seed, kind, t))
        if ok:
            passed += 1
        else:
            failures.append({"trial": t, "seed": f"{seed}:{kind}:{t}", **detail})
    return {"kind": kind, "trials": trials, "seed": seed, "passed": passed,
            "failed": trials - passed, "failures": failures, "ok": not failures}

