"""Smooth complete toric surfaces, torsion translations, and move words.

A fan is a counter-clockwise cycle of primitive rays in Z^2 with
det(v_i, v_{i+1}) = 1.  Fans built by this module are normalized to start at
the ray of smallest angle in [0, 2*pi); cone ``i`` is (rays[i], rays[i+1])
with the index taken cyclically.

G = C_N acts through the torsion point (p, q)/N of the torus.  A ray v picks
up the character det(v, (p, q)) mod N, whose kernel is the generic
stabilizer of the boundary curve D_v.
"""

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd

from birburn.chars import Char, FaithfulCharLabel, induced_faithful, restrict_char


class FanError(ValueError):
    pass


class ReplayError(ValueError):
    def __init__(self, step, move, reason):
        super().__init__(f"move {step} ({move}): {reason}")
        self.step = step
        self.move = move
        self.reason = reason


def det(v, w):
    return v[0] * w[1] - v[1] * w[0]


def _half(v):
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(u, v):
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    d = det(u, v)
    return -1 if d > 0 else (1 if d < 0 else 0)


angle_key = cmp_to_key(_angle_cmp)


def egcd_covector(v):
    """A covector m with m . v == 1, for primitive v."""
    x, y = v
    old_r, r, old_s, s, old_t, t = x, y, 1, 0, 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_s, s = s, old_s - k * s
        old_t, t = t, old_t - k * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r != 1:
        raise FanError(f"ray {v} is not primitive")
    return (old_s, old_t)


class Fan2D:
    """Immutable cyclic sequence of rays; equality is equality of ray sets."""

    __slots__ = ("rays",)

    def __init__(self, rays):
        self.rays = tuple((int(x), int(y)) for x, y in rays)

    def __len__(self):
        return len(self.rays)

    def __eq__(self, other):
        return isinstance(other, Fan2D) and set(self.rays) == set(other.rays)

    def __hash__(self):
        return hash(frozenset(self.rays))

    def __repr__(self):
        return f"Fan2D({list(self.rays)})"

    def ray_set(self):
        return frozenset(self.rays)

    def cone(self, i):
        n = len(self.rays)
        return self.rays[i % n], self.rays[(i + 1) % n]

    def cones(self):
        return [self.cone(i) for i in range(len(self.rays))]

    def index(self, ray):
        try:
            return self.rays.index(tuple(ray))
        except ValueError:
            raise FanError(f"ray {tuple(ray)} is not in the fan") from None

    def normalized(self):
        if not self.rays:
            return self
        start = min(range(len(self.rays)), key=lambda i: angle_key(self.rays[i]))
        return Fan2D(self.rays[start:] + self.rays[:start])


P2 = Fan2D([(1, 0), (0, 1), (-1, -1)])


def hirzebruch(a):
    return Fan2D([(1, 0), (0, 1), (-1, a), (0, -1)]).normalized()


def fan_problems(f):
    """List of (ray index or None, message) describing why ``f`` is invalid."""
    rays = f.rays
    out = []
    if len(rays) < 3:
        out.append((None, f"a smooth complete fan needs at least 3 rays, got {len(rays)}"))
        return out
    seen = set()
    for i, v in enumerate(rays):
        if gcd(v[0], v[1]) != 1:
            out.append((i, f"ray {v} is not primitive"))
        if v in seen:
            out.append((i, f"ray {v} is repeated"))
        seen.add(v)
    if out:
        return out
    n = len(rays)
    for i in range(n):
        v, w = rays[i], rays[(i + 1) % n]
        if det(v, w) != 1:
            out.append((i, f"det({v}, {w}) = {det(v, w)}, expected 1"))
    if not out:
        wraps = sum(1 for i in range(n) if angle_key(rays[(i + 1) % n]) < angle_key(rays[i]))
        if wraps != 1:
            out.append((None, f"rays wind {wraps} times around the origin"))
    return out


def validate_fan(f):
    return not fan_problems(f)


def blow_up(f, i):
    """Star subdivision of cone ``i``: the blow-up of a torus-fixed point."""
    n = len(f.rays)
    if not 0 <= i < n:
        raise FanError(f"cone index {i} out of range for a fan with {n} cones")
    v, w = f.cone(i)
    rays = list(f.rays)
    rays.insert(i + 1, (v[0] + w[0], v[1] + w[1]))
    return Fan2D(rays).normalized()


def is_contractible(f, i):
    n = len(f.rays)
    u, v, w = f.rays[(i - 1) % n], f.rays[i], f.rays[(i + 1) % n]
    return n > 3 and (u[0] + w[0], u[1] + w[1]) == v


def blow_down(f, i):
    """Contract the (-1)-curve of ray ``i``."""
    n = len(f.rays)
    if not 0 <= i < n:
        raise FanError(f"ray index {i} out of range for a fan with {n} rays")
    if not is_contractible(f, i):
        u, v, w = f.rays[(i - 1) % n], f.rays[i], f.rays[(i + 1) % n]
        raise FanError(f"ray {v} is not a (-1)-curve: neighbours {u} + {w} != {v}")
    rays = list(f.rays)
    del rays[i]
    return Fan2D(rays).normalized()


def blow_down_ray(f, ray):
    return blow_down(f, f.index(ray))


def contractible_rays(f):
    return [f.rays[i] for i in range(len(f.rays)) if is_contractible(f, i)]


# ---------------------------------------------------------------- embeddings


@dataclass(frozen=True)
class Embedding:
    N: int
    p: int
    q: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"group order must be >= 1, got {self.N}")
        object.__setattr__(self, "p", self.p % self.N)
        object.__setattr__(self, "q", self.q % self.N)
        if gcd(gcd(self.p, self.q), self.N) != 1:
            raise ValueError(
                f"({self.p}, {self.q}) does not have exact order {self.N}; "
                "the action would not be faithful")

    def pair(self, m):
        """Evaluate the covector ``m`` on the torsion point."""
        return Char(self.N, m[0] * self.p + m[1] * self.q)


@dataclass(frozen=True)
class RayData:
    ray: tuple
    c_rho: Char
    stab_order: int
    normal_char: Char
    residual_action: FaithfulCharLabel


def ray_character(v, e):
    return Char(e.N, v[0] * e.q - v[1] * e.p)


def ray_data(v, e):
    v = tuple(v)
    c = ray_character(v, e)
    g = gcd(c.value, e.N)
    m0 = egcd_covector(v)
    nc = restrict_char(e.pair(m0), g)
    assert g == 1 or nc.nontrivial, f"ray {v}: stabilized curve with trivial normal character"
    return RayData(v, c, g, nc, induced_faithful(c))


def cone_weights(f, i, e):
    v, w = f.cone(i)
    m_v = (w[1], -w[0])
    m_w = (-v[1], v[0])
    return e.pair(m_v), e.pair(m_w)


# ------------------------------------------------------- common resolutions


@dataclass(frozen=True)
class Resolution:
    fan: Fan2D
    tags: dict  # ray -> "both" | "X" | "Y" | "neither"

    def rays_tagged(self, *tags):
        return frozenset(r for r, t in self.tags.items() if t in tags)


def _resolving_ray(v, w):
    """First ray of the minimal resolution of the cone (v, w), det(v, w) > 1.

    Writing w = alpha*v + d*v' with det(v, v') = 1, the ray u = (w + k*v) / d
    with k = -alpha mod d has det(v, u) = 1 and det(u, w) = k < d.
    """
    d = det(v, w)
    m = egcd_covector(v)
    k = -det(w, (-m[1], m[0])) % d
    u = ((w[0] + k * v[0]) // d, (w[1] + k * v[1]) // d)
    assert det(v, u) == 1 and 0 < det(u, w) < d
    return u


def common_resolution(fX, fY):
    """Smooth fan containing the rays of both inputs, adding as few as possible."""
    X, Y = fX.ray_set(), fY.ray_set()
    rays = sorted(X | Y, key=angle_key)
    i = 0
    while i < len(rays):
        v, w = rays[i], rays[(i + 1) % len(rays)]
        if det(v, w) > 1:
            rays.insert(i + 1, _resolving_ray(v, w))
            continue
        assert det(v, w) == 1, f"union of two complete fans has a gap at {v}, {w}"
        i += 1
    Z = Fan2D(rays).normalized()
    tags = {}
    for r in Z.rays:
        tags[r] = ("both" if r in X and r in Y else
                   "X" if r in X else "Y" if r in Y else "neither")
    return Resolution(Z, tags)


def contraction_word(fZ, keep):
    """Blow-down word from ``fZ`` removing every ray not in ``keep``.

    Contracts the first contractible unwanted ray at each step; for a smooth
    refinement of a smooth fan one always exists.
    """
    keep = frozenset(keep)
    word = []
    f = fZ
    while True:
        todo = [r for r in f.rays if r not in keep]
        if not todo:
            return tuple(word)
        cand = [r for r in todo if is_contractible(f, f.index(r))]
        assert cand, f"no contractible ray among {todo} in {f}"
        word.append(Down(cand[0]))
        f = blow_down_ray(f, cand[0])


# ----------------------------------------------------------------- words


@dataclass(frozen=True)
class Up:
    cone: int

    def __str__(self):
        return f"up {self.cone}"


@dataclass(frozen=True)
class Down:
    ray: tuple

    def __post_init__(self):
        object.__setattr__(self, "ray", tuple(self.ray))

    def __str__(self):
        return f"down {self.ray[0]} {self.ray[1]}"


def apply_move(f, move):
    if isinstance(move, Up):
        return blow_up(f, move.cone)
    if isinstance(move, Down):
        return blow_down_ray(f, move.ray)
    raise TypeError(f"not a move: {move!r}")


def replay_trace(f, word):
    """All intermediate fans, starting with ``f`` itself."""
    trace = [f]
    for k, move in enumerate(word):
        try:
            trace.append(apply_move(trace[-1], move))
        except FanError as exc:
            raise ReplayError(k, move, str(exc)) from None
    return trace


def replay(f, word):
    return replay_trace(f, word)[-1]


def invert_word(f, word):
    """Word on ``replay(f, word)`` that undoes ``word``."""
    trace = replay_trace(f, word)
    inv = []
    for k in range(len(word) - 1, -1, -1):
        before, after, move = trace[k], trace[k + 1], word[k]
        if isinstance(move, Up):
            (new,) = after.ray_set() - before.ray_set()
            inv.append(Down(new))
        else:
            j = next(j for j, (v, w) in enumerate(after.cones())
                     if (v[0] + w[0], v[1] + w[1]) == move.ray)
            inv.append(Up(j))
    return tuple(inv)


def legal_moves(f):
    return [Up(i) for i in range(len(f.rays))] + [Down(r) for r in contractible_rays(f)]


# ------------------------------------------------------------- file formats


class FormatError(ValueError):
    def __init__(self, line, msg):
        super().__init__(f"line {line}: {msg}" if line else msg)
        self.line = line


def _content_lines(text):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def parse_fan(text):
    rays, lines = [], []
    for n, line in _content_lines(text):
        parts = line.split()
        try:
            x, y = (int(t) for t in parts)
        except ValueError:
            raise FormatError(n, f"expected two integers, got {line!r}") from None
        rays.append((x, y))
        lines.append(n)
    f = Fan2D(rays)
    problems = fan_problems(f)
    if problems:
        idx, msg = problems[0]
        raise FormatError(lines[idx] if idx is not None else 0, msg)
    return f.normalized()


def format_fan(f):
    return "".join(f"{x} {y}\n" for x, y in f.rays)


def parse_word(text):
    word = []
    for n, line in _content_lines(text):
        parts = line.split()
        try:
            if parts[0] == "up" and len(parts) == 2:
                word.append(Up(int(parts[1])))
            elif parts[0] == "down" and len(parts) == 3:
                word.append(Down((int(parts[1]), int(parts[2]))))
            else:
                raise ValueError
        except ValueError:
            raise FormatError(n, f"expected 'up i' or 'down x y', got {line!r}") from None
    return tuple(word)


def format_word(word):
    return "".join(f"{m}\n" for m in word)
