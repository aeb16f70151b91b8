"""Exact Smith normal form over Z with unimodular transforms.

Relation matrices here are sparse and almost all of their entries are +-1, so
the reduction runs in two phases: a sparse elimination on unit pivots, then a
dense Smith reduction of whatever non-unit block remains.  Python integers
are arbitrary precision, so entry growth cannot overflow.
"""

from dataclasses import dataclass, field


@dataclass
class SNF:
    """``U @ A @ V == D`` with ``D`` diagonal, entries ``diagonal``.

    ``U`` is stored as ``m`` sparse row dicts, ``V`` as ``n`` sparse row
    dicts (``V[i][j]`` is the entry in row i, column j).
    """

    shape: tuple
    diagonal: list
    U: list = field(repr=False)
    V: list = field(repr=False)

    @property
    def rank(self):
        return sum(1 for x in self.diagonal if x)

    @property
    def invariant_factors(self):
        return [x for x in self.diagonal if x > 1]

    @property
    def free_rank(self):
        """Free rank of the cokernel Z^n / (row space of A)."""
        return self.shape[1] - self.rank

    def dense_U(self):
        return _to_dense(self.U, self.shape[0], self.shape[0])

    def dense_V(self):
        return _to_dense(self.V, self.shape[1], self.shape[1])

    def dense_D(self):
        m, n = self.shape
        D = [[0] * n for _ in range(m)]
        for i, x in enumerate(self.diagonal):
            D[i][i] = x
        return D


def _to_dense(rows, nrows, ncols):
    out = [[0] * ncols for _ in range(nrows)]
    for i, row in enumerate(rows):
        for j, v in row.items():
            out[i][j] = v
    return out


def _axpy(y, x, c):
    """y += c*x for sparse dicts, in place."""
    for k, v in x.items():
        w = y.get(k, 0) + c * v
        if w:
            y[k] = w
        else:
            y.pop(k, None)


def _dense_snf(A):
    """Dense Smith form of a list-of-lists matrix: returns (D, U, V)."""
    m = len(A)
    n = len(A[0]) if m else 0
    A = [row[:] for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_add(i, k, c):
        A[i] = [x + c * y for x, y in zip(A[i], A[k])]
        U[i] = [x + c * y for x, y in zip(U[i], U[k])]

    def col_add(j, k, c):
        for M in (A, V):
            for row in M:
                row[j] += c * row[k]

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for M in (A, V):
            for row in M:
                row[j], row[k] = row[k], row[j]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            for i in range(t + 1, m):
                if A[i][t]:
                    row_add(i, t, -(A[i][t] // A[t][t]))
            for j in range(t + 1, n):
                if A[t][j]:
                    col_add(j, t, -(A[t][j] // A[t][t]))
            # remainders smaller than the pivot become the next pivot
            rest = [(abs(A[i][t]), i, None) for i in range(t + 1, m) if A[i][t]]
            rest += [(abs(A[t][j]), None, j) for j in range(t + 1, n) if A[t][j]]
            if rest:
                _, i, j = min(rest, key=lambda r: r[0])
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            p = A[t][t]
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            row_add(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    D = [A[i][i] for i in range(min(m, n))]
    return D, U, V


def smith_normal_form(rows, ncols):
    """Smith normal form of a sparse integer matrix.

    ``rows`` is a sequence of ``{column: value}`` dicts (or dense lists),
    ``ncols`` the number of columns.
    """
    A = []
    for r in rows:
        if isinstance(r, dict):
            A.append({j: v for j, v in r.items() if v})
        else:
            A.append({j: v for j, v in enumerate(r) if v})
    m, n = len(A), ncols
    cols = {}
    for i, row in enumerate(A):
        for j in row:
            cols.setdefault(j, set()).add(i)
    U = [{i: 1} for i in range(m)]
    Vc = [{j: 1} for j in range(n)]
    done_rows, done_cols = set(), set()
    pivots = []

    while True:
        best = None
        for i, row in enumerate(A):
            if i in done_rows:
                continue
            rlen = len(row) - 1
            for j, v in row.items():
                if v in (1, -1):
                    cost = rlen * (len(cols[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, p, c = best
        s = A[p][c]
        for r in list(cols[c]):
            if r == p:
                continue
            f = A[r][c] * s
            before = set(A[r])
            _axpy(A[r], A[p], -f)
            after = set(A[r])
            for j in before - after:
                cols[j].discard(r)
            for j in after - before:
                cols.setdefault(j, set()).add(r)
            _axpy(U[r], U[p], -f)
        # column c is now zero off the pivot; clear the pivot row with column ops
        for k, v in list(A[p].items()):
            if k == c:
                continue
            _axpy(Vc[k], Vc[c], -v * s)
            del A[p][k]
            cols[k].discard(p)
        if s == -1:
            A[p][c] = 1
            U[p] = {k: -v for k, v in U[p].items()}
        done_rows.add(p)
        done_cols.add(c)
        pivots.append((p, c))

    rest_rows = [i for i in range(m) if i not in done_rows and A[i]]
    zero_rows = [i for i in range(m) if i not in done_rows and not A[i]]
    live_cols = sorted({j for i in rest_rows for j in A[i]})
    zero_cols = [j for j in range(n) if j not in done_cols and j not in set(live_cols)]

    block = [[A[i].get(j, 0) for j in live_cols] for i in rest_rows]
    if block:
        bD, bU, bV = _dense_snf(block)
    else:
        bD, bU, bV = [], [], []

    U_out = [U[p] for p, _ in pivots]
    for k in range(len(rest_rows)):
        row = {}
        for j, c in enumerate(bU[k]):
            if c:
                _axpy(row, U[rest_rows[j]], c)
        U_out.append(row)
    U_out += [U[i] for i in zero_rows]

    V_cols = [Vc[c] for _, c in pivots]
    for k in range(len(live_cols)):
        col = {}
        for j in range(len(live_cols)):
            c = bV[j][k]
            if c:
                _axpy(col, Vc[live_cols[j]], c)
        V_cols.append(col)
    V_cols += [Vc[j] for j in zero_cols]

    V_rows = [{} for _ in range(n)]
    for j, col in enumerate(V_cols):
        for i, v in col.items():
            V_rows[i][j] = v

    diagonal = [1] * len(pivots) + bD
    diagonal += [0] * (min(m, n) - len(diagonal))
    return SNF(shape=(m, n), diagonal=diagonal, U=U_out, V=V_rows)


def matmul(A, B):
    """Dense integer matrix product; used for checks."""
    Bt = list(zip(*B)) if B else []
    return [[sum(x * y for x, y in zip(row, col)) for col in Bt] for row in A]


def is_smith_form(diagonal):
    nz = [x for x in diagonal if x]
    if any(x < 0 for x in nz) or diagonal[:len(nz)] != nz:
        return False
    return all(b % a == 0 for a, b in zip(nz, nz[1:]))
