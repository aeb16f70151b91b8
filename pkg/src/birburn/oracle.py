"""Brute-force invariant factors, kept separate from ``birburn.snf``.

Plain elementary row/column operations on a dense copy, no transform
bookkeeping.  Slow, but short enough to check by eye.
"""


def naive_invariant_factors(matrix):
    """Return (invariant factors > 1, rank) of an integer matrix."""
    A = [list(r) for r in matrix if any(r)]
    diag = []
    while A and A[0]:
        entries = [(abs(x), i, j) for i, r in enumerate(A) for j, x in enumerate(r) if x]
        if not entries:
            break
        _, i, j = min(entries)
        # pivot to the top-left corner
        A[0], A[i] = A[i], A[0]
        for r in A:
            r[0], r[j] = r[j], r[0]
        p = A[0][0]
        dirty = False
        for r in A[1:]:
            q = r[0] // p
            if q:
                for k in range(len(r)):
                    r[k] -= q * A[0][k]
            dirty = dirty or r[0] != 0
        for k in range(1, len(A[0])):
            q = A[0][k] // p
            if q:
                for r in A:
                    r[k] -= q * r[0]
            dirty = dirty or A[0][k] != 0
        if dirty:
            continue
        bad = [i for i, r in enumerate(A[1:], 1) if any(x % p for x in r)]
        if bad:
            A[0] = [x + y for x, y in zip(A[0], A[bad[0]])]
            continue
        diag.append(abs(p))
        A = [r[1:] for r in A[1:]]
        A = [r for r in A if any(r)]
    return [d for d in diag if d > 1], len(diag)
