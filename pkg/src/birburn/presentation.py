"""Rational-sector presentation of Burn_2^{nontriv}(C_N).

Generators are the point and rational-curve symbols of
``enumerate_generators``; relations are the vanishing relations and one
blow-up relation per point symbol.  The cokernel is computed with
``birburn.snf``.  The result is a "sector group": nothing here claims it
injects into Burn_2(C_N).
"""

from dataclasses import dataclass, field
from functools import lru_cache

from birburn.snf import smith_normal_form
from birburn.symbols import (
    CurveSymbol,
    FormalSum,
    FreeSymbol,
    PointSymbol,
    blowup_relation,
    enumerate_generators,
    is_rational_sector,
    vanishing_applies,
)


@dataclass
class QuotientPresentation:
    N: int
    generators: list
    relations: list            # sparse rows {generator index: coefficient}
    relation_kinds: list       # ("vanishing" | "blowup", source point symbol)
    snf: object = field(repr=False)
    index: dict = field(repr=False)

    @property
    def invariant_factors(self):
        return self.snf.invariant_factors

    @property
    def free_rank(self):
        return self.snf.free_rank

    def is_trivial(self):
        return not self.invariant_factors and self.free_rank == 0

    def group_string(self):
        if self.is_trivial():
            return "trivial"
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " x ".join(parts)

    def relation_sum(self, k):
        return FormalSum({self.generators[j]: c for j, c in self.relations[k].items()})

    def to_json(self):
        triplets = [[i, j, c] for i, row in enumerate(self.relations) for j, c in sorted(row.items())]
        return {
            "N": self.N,
            "generators": [str(g) for g in self.generators],
            "relations": {
                "shape": [len(self.relations), len(self.generators)],
                "kinds": [kind for kind, _ in self.relation_kinds],
                "triplets": triplets,
            },
            "snf_diagonal": list(self.snf.diagonal),
            "invariant_factors": list(self.invariant_factors),
            "free_rank": self.free_rank,
            "group": self.group_string(),
        }


@dataclass
class Reduction:
    """Image of a symbol sum in the sector group plus pass-through free parts.

    ``torsion`` pairs each invariant factor with a residue, ``free`` lists the
    free cokernel coordinates; ``passthrough`` holds opaque-curve and free
    symbols, which no relation touches.
    """

    torsion: list
    free: list
    passthrough: object

    @property
    def is_zero(self):
        return (all(r == 0 for _, r in self.torsion)
                and all(x == 0 for x in self.free)
                and not self.passthrough)

    def coordinates(self):
        return [r for _, r in self.torsion] + list(self.free)


def _relations(N, generators):
    index = {g: i for i, g in enumerate(generators)}
    rows, kinds = [], []
    for g in generators:
        if not isinstance(g, PointSymbol):
            continue
        if vanishing_applies(g):
            rows.append({index[g]: 1})
            kinds.append(("vanishing", g))
        rel = blowup_relation(g)
        if rel:
            rows.append({index[t]: c for t, c in rel.items()})
            kinds.append(("blowup", g))
    return rows, kinds, index


@lru_cache(maxsize=None)
def build_presentation(N):
    if N < 2:
        raise ValueError(f"presentation needs N >= 2, got {N}")
    generators = enumerate_generators(N)
    rows, kinds, index = _relations(N, generators)
    snf = smith_normal_form(rows, len(generators))
    return QuotientPresentation(N, generators, rows, kinds, snf, index)


def reduce(s, q):
    """Reduce the symbol sum ``s`` modulo the relations of ``q``."""
    y = {}
    passthrough = FormalSum()
    for t, c in s.items():
        if t.N != q.N:
            raise ValueError(f"symbol {t} belongs to C_{t.N}, presentation is for C_{q.N}")
        if is_rational_sector(t):
            if t not in q.index:
                raise ValueError(f"symbol {t} is not a generator of the C_{q.N} presentation")
            y[q.index[t]] = c
        elif isinstance(t, (FreeSymbol, CurveSymbol)):
            passthrough = passthrough + FormalSum({t: c})
        else:
            raise ValueError(f"cannot reduce {t!r}")
    n = len(q.generators)
    z = [0] * n
    V = q.snf.V
    for i, c in y.items():
        for j, v in V[i].items():
            z[j] += c * v
    torsion, free = [], []
    for j in range(n):
        d = q.snf.diagonal[j] if j < len(q.snf.diagonal) else 0
        if d == 0:
            free.append(z[j])
        elif d > 1:
            torsion.append((d, z[j] % d))
    return Reduction(torsion=torsion, free=free, passthrough=passthrough)


def relation_matrix_dense(q):
    return [[row.get(j, 0) for j in range(len(q.generators))] for row in q.relations]

