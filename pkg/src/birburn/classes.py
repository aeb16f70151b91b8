"""Classes [X / G] of toric surfaces with a torsion-translation action.

The action is free on the open torus and the boundary is a simple normal
crossing divisor with G-invariant components, so it is already in standard
form.  The fixed loci of subgroups are unions of boundary curves and
torus-fixed points:

* a boundary curve D_v with generic stabilizer C_g, g > 1, contributes a
  curve symbol with the residual C_N / C_g action on D_v = P^1;
* a torus-fixed point contributes a point symbol with H = C_N, unless it lies
  on a boundary curve fixed pointwise by all of G;
* the surface itself contributes one free symbol.
"""

from dataclasses import dataclass
from math import gcd

from birburn.chars import FaithfulCharLabel
from birburn.symbols import (
    CurveSymbol,
    FormalSum,
    FreeSymbol,
    PointSymbol,
    RationalCurve,
    relabel_symbol,
)
from birburn.toric import cone_weights, ray_data

TORUS_TAG = "T2"


@dataclass(frozen=True)
class Opaque:
    """A class known only by name (non-toric curves, surfaces, ...)."""

    name: str

    def sort_key(self):
        return (9, self.name)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class EquivCurveClass:
    N: int
    label: object  # FaithfulCharLabel of order N, or Opaque

    def __post_init__(self):
        if isinstance(self.label, FaithfulCharLabel) and self.label.order != self.N:
            raise ValueError(
                f"label {self.label} is not faithful for C_{self.N}; "
                "such a curve has nontrivial generic stabilizer")

    def sort_key(self):
        if isinstance(self.label, FaithfulCharLabel):
            return (0, self.N, self.label.rep, "")
        return (1, self.N, 0, self.label.name)

    def __str__(self):
        return f"[P1 / {self.label}]" if isinstance(self.label, FaithfulCharLabel) \
            else f"[{self.label} / C{self.N}]"


@dataclass(frozen=True)
class OrbifoldCurveSignature:
    coarse: object  # genus (int) or opaque name (str)
    orders: tuple

    def __post_init__(self):
        if any(o < 2 for o in self.orders):
            raise ValueError(f"orbifold point orders must be >= 2, got {self.orders}")
        object.__setattr__(self, "orders", tuple(sorted(self.orders)))

    def sort_key(self):
        c = self.coarse
        return (3, c, "", self.orders) if isinstance(c, int) else (4, 0, c, self.orders)

    def __str__(self):
        coarse = f"g={self.coarse}" if isinstance(self.coarse, int) else self.coarse
        return f"({coarse}; {{{', '.join(map(str, self.orders))}}})"


class NontrivialStabilizer:
    """Marker: the divisor has nontrivial generic stabilizer of this order."""

    __slots__ = ("order",)

    def __init__(self, order):
        self.order = order

    def __eq__(self, other):
        return isinstance(other, NontrivialStabilizer) and other.order == self.order

    def __hash__(self):
        return hash(("stab", self.order))

    def __repr__(self):
        return f"NontrivialStabilizer({self.order})"


def class_of(f, e, tag=TORUS_TAG):
    """[X / C_N] for the toric surface of ``f`` with the action ``e``."""
    N = e.N
    terms = {}

    def add(sym):
        terms[sym] = terms.get(sym, 0) + 1

    data = [ray_data(v, e) for v in f.rays]
    for rd in data:
        if rd.stab_order > 1:
            add(CurveSymbol(N, rd.stab_order, rd.normal_char.value,
                            RationalCurve(rd.residual_action)))
    n = len(f.rays)
    for i in range(n):
        if data[i].stab_order == N or data[(i + 1) % n].stab_order == N:
            continue
        w1, w2 = cone_weights(f, i, e)
        add(PointSymbol(N, N, w1.value, w2.value))
    add(FreeSymbol(N, tag))
    return FormalSum(terms)


def relabel_group_automorphism(s, u):
    """Precompose every character with the automorphism c -> u*c of C_N."""
    for t in s.terms():
        if gcd(u, t.N) != 1:
            raise ValueError(f"{u} is not a unit modulo {t.N}")
    return s.map_terms(lambda t: relabel_symbol(t, u))


def divisor_class_equivariant(v, e):
    rd = ray_data(v, e)
    if rd.stab_order != 1:
        return NontrivialStabilizer(rd.stab_order)
    return EquivCurveClass(e.N, rd.residual_action)


def divisor_class_orbifold(v, e):
    """Signature of [D_v / G]: P^1 with the two torus-fixed points stacky."""
    rd = ray_data(v, e)
    if rd.stab_order != 1:
        return NontrivialStabilizer(rd.stab_order)
    orders = (e.N, e.N) if e.N > 1 else ()
    return OrbifoldCurveSignature(0, orders)


RATIONAL_CURVE = Opaque("P1")
