"""Characters of finite cyclic groups.

A cyclic group C_d is identified with Z/d through a fixed generator, and its
characters with Z/d through a fixed primitive d-th root of unity: the
character with value ``v`` sends the generator to zeta_d**v.  Subgroups of
C_N are referenced by their order, since there is exactly one per divisor.
"""

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class CyclicGroup:
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"cyclic group order must be >= 1, got {self.order}")

    def subgroup_orders(self):
        """Orders of all subgroups, ascending."""
        return divisors(self.order)

    def units(self):
        return [u for u in range(1, self.order + 1) if gcd(u, self.order) == 1]


@dataclass(frozen=True, order=True)
class Char:
    modulus: int
    value: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"character modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def nontrivial(self):
        return self.value != 0

    def __neg__(self):
        return Char(self.modulus, -self.value)

    def __add__(self, other):
        _check_same_modulus(self, other)
        return Char(self.modulus, self.value + other.value)

    def __sub__(self, other):
        _check_same_modulus(self, other)
        return Char(self.modulus, self.value - other.value)

    def scale(self, u):
        return Char(self.modulus, u * self.value)


@dataclass(frozen=True, order=True)
class FaithfulCharLabel:
    """A faithful character of C_order, up to inversion.

    ``rep`` is the smaller of the two representatives ``e`` and ``order - e``.
    The trivial group gets ``rep = 0``.
    """

    order: int
    rep: int

    def __post_init__(self):
        m, r = self.order, self.rep
        if m < 1:
            raise ValueError(f"label order must be >= 1, got {m}")
        if m == 1:
            if r != 0:
                raise ValueError("the label of the trivial group has rep 0")
            return
        if not (1 <= r <= m // 2) or gcd(r, m) != 1:
            raise ValueError(f"rep {r} is not a canonical faithful character of C_{m}")

    @classmethod
    def of(cls, order, value):
        """Canonical label of the faithful character ``value`` of C_order."""
        if order == 1:
            return cls(1, 0)
        v = value % order
        if gcd(v, order) != 1:
            raise ValueError(f"character {value} of C_{order} is not faithful")
        return cls(order, min(v, order - v))

    def scale(self, u):
        return FaithfulCharLabel.of(self.order, u * self.rep)

    def __str__(self):
        return f"C{self.order}" if self.order == 1 else f"C{self.order}:{self.rep}"


def _check_same_modulus(c1, c2):
    if c1.modulus != c2.modulus:
        raise ValueError(f"characters of different groups: C_{c1.modulus} vs C_{c2.modulus}")


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def char_kernel_order(c):
    """Order of the kernel of ``c`` inside C_d."""
    return gcd(c.value, c.modulus)


def restrict_char(c, d_sub):
    """Restrict ``c`` to the subgroup of order ``d_sub``.

    That subgroup is generated by ``modulus // d_sub``, on which ``c`` takes
    zeta_d ** (value * d / d_sub) = zeta_{d_sub} ** value.
    """
    if d_sub < 1 or c.modulus % d_sub:
        raise ValueError(f"{d_sub} does not divide {c.modulus}")
    return Char(d_sub, c.value)


def induced_faithful(c):
    """Label of the faithful character that ``c`` induces on C_d / ker(c)."""
    g = char_kernel_order(c)
    m = c.modulus // g
    return FaithfulCharLabel.of(m, c.value // g)
