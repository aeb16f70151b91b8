"""Symbols of Burn_2(G) for cyclic G = C_N and formal integer sums of them.

Three kinds of generators occur:

* ``PointSymbol``: stabilizer C_d, trivial residual action on k, and an
  unordered pair of characters (a, b) of C_d;
* ``CurveSymbol``: stabilizer C_d, one normal character, and a curve with an
  action of a subgroup of C_N / C_d (a rational curve labelled by a faithful
  character up to inversion, or an opaque named curve);
* ``FreeSymbol``: trivial stabilizer, a surface with generically free action,
  identified by a tag only.

All constructors canonicalize; an invalid symbol raises ``SymbolError``.
"""

from dataclasses import dataclass
from math import gcd

from birburn.chars import (
    Char,
    FaithfulCharLabel,
    char_kernel_order,
    divisors,
    induced_faithful,
    restrict_char,
)


class SymbolError(ValueError):
    pass


@dataclass(frozen=True)
class RationalCurve:
    """k(t) with a faithful action of a cyclic group, labelled up to t -> 1/t."""

    action: FaithfulCharLabel

    def sort_key(self):
        return (0, self.action.order, self.action.rep)

    def __str__(self):
        return f"P1[{self.action}]"


@dataclass(frozen=True)
class OpaqueCurve:
    name: str
    action_tag: str = ""

    def sort_key(self):
        return (1, self.name, self.action_tag)

    def __str__(self):
        return f"{self.name}[{self.action_tag}]" if self.action_tag else self.name


TRIVIAL_P1 = RationalCurve(FaithfulCharLabel(1, 0))


def _check_subgroup(N, d):
    if N < 1:
        raise SymbolError(f"group order must be >= 1, got {N}")
    if d < 2 or N % d:
        raise SymbolError(f"stabilizer order {d} must be a divisor > 1 of {N}")


@dataclass(frozen=True)
class PointSymbol:
    N: int
    d: int
    a: int
    b: int

    def __post_init__(self):
        _check_subgroup(self.N, self.d)
        a, b = sorted((self.a % self.d, self.b % self.d))
        if a == 0:
            raise SymbolError(f"characters must be nontrivial: {self.a}, {self.b} mod {self.d}")
        if gcd(gcd(a, b), self.d) != 1:
            raise SymbolError(
                f"characters {a}, {b} do not generate the dual of C_{self.d}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def beta(self):
        return (Char(self.d, self.a), Char(self.d, self.b))

    def sort_key(self):
        return (0, self.N, self.d, self.a, self.b)

    def __str__(self):
        return f"pt(C{self.d}; {self.a},{self.b})"


@dataclass(frozen=True)
class CurveSymbol:
    N: int
    d: int
    normal_char: int
    curve: object

    def __post_init__(self):
        _check_subgroup(self.N, self.d)
        nc = self.normal_char % self.d
        if gcd(nc, self.d) != 1:
            raise SymbolError(
                f"normal character {self.normal_char} does not generate the dual of C_{self.d}")
        object.__setattr__(self, "normal_char", nc)
        if isinstance(self.curve, RationalCurve):
            if (self.N // self.d) % self.curve.action.order:
                raise SymbolError(
                    f"residual action of order {self.curve.action.order} "
                    f"is not a subgroup of C_{self.N}/C_{self.d}")
        elif not isinstance(self.curve, OpaqueCurve):
            raise SymbolError(f"unknown curve type {self.curve!r}")

    def sort_key(self):
        return (1, self.N, self.d, self.normal_char) + self.curve.sort_key()

    def __str__(self):
        return f"crv(C{self.d}; {self.normal_char}; {self.curve})"


@dataclass(frozen=True)
class FreeSymbol:
    N: int
    variety_tag: str

    def sort_key(self):
        return (2, self.N, self.variety_tag)

    def __str__(self):
        return f"free({self.variety_tag})"


def is_rational_sector(s):
    """Point symbols and rational-curve symbols: the part the relations act on."""
    return isinstance(s, PointSymbol) or (
        isinstance(s, CurveSymbol) and isinstance(s.curve, RationalCurve))


class FormalSum:
    """Finite Z-linear combination of hashable, sortable terms.

    Terms must provide ``sort_key()``; zero coefficients are never stored.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        self._coeffs = {}
        for term, c in (coeffs or {}).items():
            if c:
                self._coeffs[term] = c

    @classmethod
    def of(cls, *terms):
        out = cls()
        for t in terms:
            out._coeffs[t] = out._coeffs.get(t, 0) + 1
        out._coeffs = {t: c for t, c in out._coeffs.items() if c}
        return out

    def __getitem__(self, term):
        return self._coeffs.get(term, 0)

    def __contains__(self, term):
        return term in self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __iter__(self):
        return iter(self.terms())

    def terms(self):
        return sorted(self._coeffs, key=lambda t: t.sort_key())

    def items(self):
        return [(t, self._coeffs[t]) for t in self.terms()]

    def coefficient_sum(self):
        return sum(self._coeffs.values())

    def __add__(self, other):
        out = dict(self._coeffs)
        for t, c in other._coeffs.items():
            out[t] = out.get(t, 0) + c
        return FormalSum(out)

    def __neg__(self):
        return FormalSum({t: -c for t, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return FormalSum({t: k * c for t, c in self._coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._coeffs
        return isinstance(other, FormalSum) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def map_terms(self, f):
        out = {}
        for t, c in self._coeffs.items():
            ft = f(t)
            out[ft] = out.get(ft, 0) + c
        return FormalSum(out)

    def filter(self, pred):
        return FormalSum({t: c for t, c in self._coeffs.items() if pred(t)})

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for t, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{t}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"FormalSum({self})"


SymbolSum = FormalSum


def canonicalize(s):
    """Return the canonical form of ``s``; constructors already canonicalize."""
    if isinstance(s, PointSymbol):
        return PointSymbol(s.N, s.d, s.a, s.b)
    if isinstance(s, CurveSymbol):
        curve = s.curve
        if isinstance(curve, RationalCurve):
            a = curve.action
            curve = RationalCurve(FaithfulCharLabel.of(a.order, a.rep))
        return CurveSymbol(s.N, s.d, s.normal_char, curve)
    if isinstance(s, FreeSymbol):
        return s
    raise SymbolError(f"not a symbol: {s!r}")


def vanishing_applies(p):
    return (p.a + p.b) % p.d == 0


def blowup_rhs(p):
    """Theta_1 + Theta_2 for the point symbol ``p`` with beta = (a, b)."""
    d, a, b = p.d, p.a, p.b
    out = FormalSum()
    if a != b:
        t1 = PointSymbol(p.N, d, a, b - a)
        t2 = PointSymbol(p.N, d, b, a - b)
        # beta generates: gcd(a, b - a, d) == gcd(a, b, d)
        assert gcd(gcd(a, b - a), d) == 1 and gcd(gcd(b, a - b), d) == 1
        out = out + FormalSum.of(t1, t2)
    diff = Char(d, b - a)
    g = char_kernel_order(diff)
    if g > 1:
        nc = restrict_char(Char(d, b), g)
        if nc.nontrivial:
            label = induced_faithful(diff)
            out = out + FormalSum.of(CurveSymbol(p.N, g, nc.value, RationalCurve(label)))
    return out


def blowup_relation(p):
    return FormalSum.of(p) - blowup_rhs(p)


def faithful_labels(m):
    """All canonical faithful-character labels of C_m."""
    if m == 1:
        return [FaithfulCharLabel(1, 0)]
    return [FaithfulCharLabel(m, r) for r in range(1, m // 2 + 1) if gcd(r, m) == 1]


def enumerate_generators(N):
    """Point and rational-curve symbols of the rational sector, in fixed order."""
    points, curves = [], []
    for d in divisors(N):
        if d == 1:
            continue
        for a in range(1, d):
            for b in range(a, d):
                if gcd(gcd(a, b), d) == 1:
                    points.append(PointSymbol(N, d, a, b))
        for nc in range(1, d):
            if gcd(nc, d) != 1:
                continue
            for m in divisors(N // d):
                for label in faithful_labels(m):
                    curves.append(CurveSymbol(N, d, nc, RationalCurve(label)))
    points.sort(key=lambda s: s.sort_key())
    curves.sort(key=lambda s: s.sort_key())
    return points + curves


def project_nontrivial(s):
    """Drop the Z[Bir_{G,n}] part (free symbols)."""
    return s.filter(lambda t: not isinstance(t, FreeSymbol))


def relabel_symbol(s, u):
    """Apply the automorphism c -> u*c of C_N to the character data of ``s``."""
    if isinstance(s, PointSymbol):
        return PointSymbol(s.N, s.d, u * s.a, u * s.b)
    if isinstance(s, CurveSymbol):
        curve = s.curve
        if isinstance(curve, RationalCurve):
            curve = RationalCurve(curve.action.scale(u))
        return CurveSymbol(s.N, s.d, u * s.normal_char, curve)
    # all faithful translations of C_N on the 2-torus are conjugate under GL_2(Z)
    return s
