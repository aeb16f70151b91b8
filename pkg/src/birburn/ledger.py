"""Exceptional-divisor ledgers of birational maps and the invariants
c, C_G and the orbifold invariant C_orb.

A toric map is a fan plus a word of elementary moves; every divisor is
identified by its ray, so a divisor on X and its proper transform on any
other model share a key.  A scripted map lists its exceptional divisors
directly, with opaque class labels; scripted maps do not compose.
"""

from dataclasses import dataclass, field

from birburn.classes import (
    RATIONAL_CURVE,
    NontrivialStabilizer,
    divisor_class_equivariant,
    divisor_class_orbifold,
)
from birburn.symbols import FormalSum
from birburn.toric import (
    angle_key,
    common_resolution,
    contraction_word,
    invert_word,
    replay,
)

FORWARD = "forward"    # in Ex(phi): divisors of the source contracted by phi
BACKWARD = "backward"  # in Ex(phi^-1)


class CompositionError(ValueError):
    pass


@dataclass(frozen=True)
class ToricMap:
    fan_x: object
    word: tuple
    emb: object
    fan_y: object = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "fan_y", replay(self.fan_x, self.word))


@dataclass(frozen=True)
class ScriptedDivisor:
    name: str
    equiv_class: object
    orbifold_class: object
    bir_class: object
    generic_stab_trivial: bool = True


@dataclass(frozen=True)
class ScriptedMap:
    exc_fwd: tuple
    exc_bwd: tuple
    dimension: int
    N: int


@dataclass(frozen=True)
class LedgerEntry:
    divisor: object
    side: str
    generic_stab_trivial: bool
    equiv_class: object
    orbifold_class: object
    bir_class: object

    def to_json(self):
        return {
            "divisor": list(self.divisor) if isinstance(self.divisor, tuple) else self.divisor,
            "side": self.side,
            "generic_stab_trivial": self.generic_stab_trivial,
            "equiv_class": _label_json(self.equiv_class),
            "orbifold_class": _label_json(self.orbifold_class),
            "bir_class": str(self.bir_class),
        }


def _label_json(x):
    if isinstance(x, NontrivialStabilizer):
        return f"excluded: generic stabilizer of order {x.order}"
    return str(x)


@dataclass(frozen=True)
class ExceptionalSets:
    resolution: object
    ex_sigma: frozenset
    ex_tau: frozenset
    ex_sigma_inv: frozenset
    ex_tau_inv: frozenset
    ex_phi: frozenset
    ex_phi_inv: frozenset


def exceptional_sets(m):
    """Ex(phi), Ex(phi^-1) via the common resolution Z with sigma: Z -> X,
    tau: Z -> Y; asserts that they match the direct ray-set differences."""
    X, Y = m.fan_x.ray_set(), m.fan_y.ray_set()
    res = common_resolution(m.fan_x, m.fan_y)
    Z = res.fan.ray_set()
    ex_sigma = res.rays_tagged("Y", "neither")
    ex_tau = res.rays_tagged("X", "neither")
    out = ExceptionalSets(
        resolution=res,
        ex_sigma=ex_sigma,
        ex_tau=ex_tau,
        ex_sigma_inv=X - Z,
        ex_tau_inv=Y - Z,
        ex_phi=ex_tau - ex_sigma,
        ex_phi_inv=ex_sigma - ex_tau,
    )
    assert out.ex_phi == X - Y and out.ex_phi_inv == Y - X
    assert not (out.ex_phi & out.ex_phi_inv)
    return out


def _toric_entry(v, side, e):
    eq = divisor_class_equivariant(v, e)
    orb = divisor_class_orbifold(v, e)
    return LedgerEntry(v, side, not isinstance(eq, NontrivialStabilizer), eq, orb, RATIONAL_CURVE)


def ledger(m):
    if isinstance(m, ToricMap):
        ex = exceptional_sets(m)
        fwd = sorted(ex.ex_phi, key=angle_key)
        bwd = sorted(ex.ex_phi_inv, key=angle_key)
        return ([_toric_entry(v, FORWARD, m.emb) for v in fwd]
                + [_toric_entry(v, BACKWARD, m.emb) for v in bwd])
    if isinstance(m, ScriptedMap):
        out = []
        for side, divs in ((FORWARD, m.exc_fwd), (BACKWARD, m.exc_bwd)):
            for d in divs:
                out.append(LedgerEntry(d.name, side, d.generic_stab_trivial,
                                       d.equiv_class, d.orbifold_class, d.bir_class))
        return out
    raise TypeError(f"not a map: {m!r}")


def _signed_sum(entries, attr, equivariant):
    out = {}
    for en in entries:
        if equivariant and not en.generic_stab_trivial:
            continue
        label = getattr(en, attr)
        sign = 1 if en.side == BACKWARD else -1
        out[label] = out.get(label, 0) + sign
    return FormalSum(out)


def c_classical(m):
    """c(phi): function-field classes, no stabilizer condition."""
    return _signed_sum(ledger(m), "bir_class", equivariant=False)


def C_G(m):
    return _signed_sum(ledger(m), "equiv_class", equivariant=True)


def C_orb(m):
    return _signed_sum(ledger(m), "orbifold_class", equivariant=True)


INVARIANTS = {"c": c_classical, "C_G": C_G, "C_orb": C_orb}


def compose(m1, m2):
    """The map m2 o m1 (first m1, then m2)."""
    if m1.emb != m2.emb:
        raise CompositionError(f"embeddings differ: {m1.emb} vs {m2.emb}")
    if m1.fan_y != m2.fan_x:
        raise CompositionError(
            f"codomain {list(m1.fan_y.rays)} does not match domain {list(m2.fan_x.rays)}")
    return ToricMap(m1.fan_x, m1.word + m2.word, m1.emb)


def inverse(m):
    return ToricMap(m.fan_y, invert_word(m.fan_x, m.word), m.emb)


def factorization(m):
    """The blow-down maps sigma: Z -> X and tau: Z -> Y."""
    ex = exceptional_sets(m)
    Z = ex.resolution.fan
    sigma = ToricMap(Z, contraction_word(Z, m.fan_x.ray_set()), m.emb)
    tau = ToricMap(Z, contraction_word(Z, m.fan_y.ray_set()), m.emb)
    assert sigma.fan_y == m.fan_x and tau.fan_y == m.fan_y
    return sigma, tau


def ledger_report(m):
    return {
        "entries": [en.to_json() for en in ledger(m)],
        "c": sum_json(c_classical(m)),
        "C_G": sum_json(C_G(m)),
        "C_orb": sum_json(C_orb(m)),
    }


def sum_json(s):
    return {"terms": [[str(t), c] for t, c in s.items()], "is_zero": not s, "text": str(s)}

