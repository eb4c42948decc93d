"""Piecewise-linear paths, LS paths and semi-infinite LS paths.

Both path kinds share one implementation of the root operators: the path
is a list of pieces (a direction or a Weyl group element) on consecutive
intervals of ``[0, 1]``, ``H_i`` is read off the corner values, the window
``[t_0, t_1]`` is cut out, reflected by ``r_i``, and the result is put in
normal form (no zero-length pieces, no equal neighbours).
"""

from fractions import Fraction
from math import lcm
from typing import NamedTuple

from .cartan import LevelZeroWeight
from .errors import BadCuts, BadMultiple, InvalidPath, NotAPetersonRep, NotDecreasing, OutOfDomain
from .graphs import J_of, has_path
from .parabolic import is_peterson_rep, proj_J
from .weyl import AffineWeylElem


class HData(NamedTuple):
    corners: tuple
    m: Fraction
    e_pair: tuple
    f_pair: tuple


def _corners(cuts, slopes):
    H = [Fraction(0)]
    for u, h in enumerate(slopes):
        H.append(H[-1] + (cuts[u + 1] - cuts[u]) * h)
    return H


def _hits(cuts, H, slopes, u, value):
    """Times in piece ``u`` where ``H`` equals ``value``: None, a point, or the whole piece."""
    lo, hi = H[u], H[u + 1]
    if slopes[u] == 0:
        return (cuts[u], cuts[u + 1]) if lo == value else None
    if min(lo, hi) <= value <= max(lo, hi):
        t = cuts[u] + (value - lo) / slopes[u]
        return (t, t)
    return None


def _e_pair(cuts, H, slopes):
    m = min(H)
    q = H.index(m)
    t1 = cuts[q]
    t0 = None
    for u in range(q):
        hit = _hits(cuts, H, slopes, u, m + 1)
        if hit is not None:
            t0 = hit[1]
    return t0, t1


def _f_pair(cuts, H, slopes):
    m = min(H)
    p = len(H) - 1 - H[::-1].index(m)
    t0 = cuts[p]
    for u in range(p, len(slopes)):
        hit = _hits(cuts, H, slopes, u, m + 1)
        if hit is not None:
            return t0, hit[0]
    raise InvalidPath("H_i never returns to m_i + 1 after its last minimum")


def _split(items, cuts, t):
    """Insert the cut ``t`` (if new), duplicating the piece that contains it."""
    if t in cuts:
        return list(items), list(cuts)
    for u in range(len(items)):
        if cuts[u] < t < cuts[u + 1]:
            return (
                list(items[: u + 1]) + list(items[u:]),
                list(cuts[: u + 1]) + [t] + list(cuts[u + 1:]),
            )
    raise OutOfDomain(f"cut {t} outside [0, 1]")


def normalize(items, cuts):
    """Drop zero-length pieces and merge equal neighbours."""
    out_items, out_cuts = [], [cuts[0]]
    for u, it in enumerate(items):
        if cuts[u + 1] == cuts[u]:
            continue
        if out_items and out_items[-1] == it:
            out_cuts[-1] = cuts[u + 1]
        else:
            out_items.append(it)
            out_cuts.append(cuts[u + 1])
    return tuple(out_items), tuple(out_cuts)


def _apply_window(items, cuts, t0, t1, reflect):
    items, cuts = _split(items, cuts, t0)
    items, cuts = _split(items, cuts, t1)
    new = [reflect(it) if t0 <= cuts[u] and cuts[u + 1] <= t1 else it for u, it in enumerate(items)]
    return normalize(new, cuts)


def _check_integral(m):
    if Fraction(m).denominator != 1:
        raise InvalidPath(f"minimum of H_i is {m}, not an integer")


def _root_e(items, cuts, slopes, reflect):
    H = _corners(cuts, slopes)
    m = min(H)
    _check_integral(m)
    if m == 0:
        return None
    t0, t1 = _e_pair(cuts, H, slopes)
    return _apply_window(items, cuts, t0, t1, reflect)


def _root_f(items, cuts, slopes, reflect):
    H = _corners(cuts, slopes)
    m = min(H)
    _check_integral(m)
    if H[-1] - m == 0:
        return None
    t0, t1 = _f_pair(cuts, H, slopes)
    return _apply_window(items, cuts, t0, t1, reflect)


def _eps_phi(cuts, slopes):
    H = _corners(cuts, slopes)
    m = min(H)
    _check_integral(m)
    return int(-m), int(H[-1] - m)


def _check_cuts(cuts, s):
    if len(cuts) != s + 1 or s < 1:
        raise BadCuts("need one more cut than pieces and at least one piece")
    if cuts[0] != 0 or cuts[-1] != 1:
        raise BadCuts("cuts must start at 0 and end at 1")
    if any(cuts[u] >= cuts[u + 1] for u in range(s)):
        raise BadCuts("cuts must be strictly increasing")


class PLPath:
    """Piecewise-linear path ``(nu_1, ..., nu_s; a_0, ..., a_s)`` of level-zero weights."""

    __slots__ = ("cartan", "directions", "cuts", "_hash")

    def __init__(self, cartan, directions, cuts=None, normal=True):
        directions = tuple(directions)
        if cuts is None:
            cuts = (0, 1) if len(directions) == 1 else None
        cuts = tuple(Fraction(a) for a in cuts)
        _check_cuts(cuts, len(directions))
        if normal:
            directions, cuts = normalize(directions, cuts)
        self.cartan = cartan
        self.directions = directions
        self.cuts = cuts
        self._hash = hash((directions, cuts))

    @classmethod
    def straight(cls, cartan, lam):
        return cls(cartan, (lam,), (0, 1))

    def __eq__(self, other):
        return (
            isinstance(other, PLPath)
            and self.directions == other.directions
            and self.cuts == other.cuts
        )

    def __hash__(self):
        return self._hash

    def __call__(self, t):
        return self.eval(t)

    def eval(self, t):
        t = Fraction(t)
        if not 0 <= t <= 1:
            raise OutOfDomain(f"t={t} outside [0, 1]")
        total = LevelZeroWeight.zero(self.cartan.rank)
        for u, nu in enumerate(self.directions):
            lo, hi = self.cuts[u], self.cuts[u + 1]
            if t <= lo:
                break
            total = total + nu * (min(t, hi) - lo)
        return total.normalized()

    def wt(self):
        return self.eval(1)

    weight = wt

    def slopes(self, i):
        return [Fraction(self.cartan.pair_simple(i, nu)) for nu in self.directions]

    def h_data(self, i):
        sl = self.slopes(i)
        H = _corners(self.cuts, sl)
        m = min(H)
        e_pair = _e_pair(self.cuts, H, sl) if m <= -1 else None
        f_pair = _f_pair(self.cuts, H, sl) if H[-1] - m >= 1 else None
        return HData(tuple(H), m, e_pair, f_pair)

    def _reflector(self, i):
        r = AffineWeylElem.simple(self.cartan, i)
        return lambda nu: r.act_on_weight(nu)

    def e(self, i):
        res = _root_e(self.directions, self.cuts, self.slopes(i), self._reflector(i))
        return None if res is None else PLPath(self.cartan, *res, normal=False)

    def f(self, i):
        res = _root_f(self.directions, self.cuts, self.slopes(i), self._reflector(i))
        return None if res is None else PLPath(self.cartan, *res, normal=False)

    def epsilon(self, i):
        return _eps_phi(self.cuts, self.slopes(i))[0]

    def phi(self, i):
        return _eps_phi(self.cuts, self.slopes(i))[1]

    def local_minima_integral(self, i):
        """Every local minimum of ``H_i`` is an integer (checked at corners)."""
        H = _corners(self.cuts, self.slopes(i))
        for u in range(len(H)):
            left = H[u - 1] if u > 0 else None
            right = H[u + 1] if u + 1 < len(H) else None
            if (left is None or left >= H[u]) and (right is None or right >= H[u]):
                if H[u].denominator != 1:
                    return False
        return True

    def sort_key(self):
        return (self.cuts, tuple((nu.fun, nu.delta) for nu in self.directions))

    def __repr__(self):
        return f"PLPath({self})"

    def __str__(self):
        parts = [f"{nu} @ {a}" for nu, a in zip(self.directions, self.cuts[1:])]
        return "PL{" + "; ".join(parts) + "}"


def dilate(pi, N):
    """``iota_N(pi)(t) = N pi(t)``."""
    if N < 1:
        raise ValueError("N must be positive")
    return PLPath(pi.cartan, [nu * N for nu in pi.directions], pi.cuts)


def concat(paths):
    """``pi_1 * ... * pi_N``: run each path in time ``1/N``, one after another."""
    paths = list(paths)
    if not paths:
        raise ValueError("need at least one path")
    N = len(paths)
    dirs, cuts = [], [Fraction(0)]
    for k, p in enumerate(paths):
        for u, nu in enumerate(p.directions):
            dirs.append(nu * N)
            cuts.append((k + p.cuts[u + 1]) / N)
    return PLPath(paths[0].cartan, dirs, cuts)


class SiLSPath:
    """Semi-infinite LS path ``(x_1, ..., x_s; a_0, ..., a_s)`` of shape ``lam``.

    The constructor only normalizes; :func:`validate_sils` certifies the
    defining chain condition.
    """

    __slots__ = ("cartan", "elems", "cuts", "lam", "J", "_hash")

    def __init__(self, elems, cuts, lam, normal=True):
        elems = tuple(elems)
        cuts = tuple(Fraction(a) for a in cuts)
        _check_cuts(cuts, len(elems))
        if normal:
            elems, cuts = normalize(elems, cuts)
        self.cartan = elems[0].cartan
        self.elems = elems
        self.cuts = cuts
        self.lam = lam
        self.J = J_of(lam)
        self._hash = hash((elems, cuts, lam))

    @classmethod
    def straight(cls, x, lam):
        """``eta_x = (x; 0, 1)``."""
        return cls((x,), (0, 1), lam)

    @classmethod
    def identity(cls, cartan, lam):
        """``eta_e``."""
        return cls.straight(AffineWeylElem.identity(cartan), lam)

    def __eq__(self, other):
        return (
            isinstance(other, SiLSPath)
            and self.elems == other.elems
            and self.cuts == other.cuts
            and self.lam == other.lam
        )

    def __hash__(self):
        return self._hash

    def project(self):
        """``eta-bar = (x_1 lam, ..., x_s lam; a)``."""
        return PLPath(self.cartan, [x.act_on_weight(self.lam) for x in self.elems], self.cuts)

    def wt(self):
        return self.project().wt()

    weight = wt

    def slopes(self, i):
        c = self.cartan
        return [Fraction(c.pair_simple(i, x.act_on_weight(self.lam))) for x in self.elems]

    def h_data(self, i):
        return self.project().h_data(i)

    def e(self, i):
        r = AffineWeylElem.simple(self.cartan, i)
        res = _root_e(self.elems, self.cuts, self.slopes(i), lambda x: r * x)
        return None if res is None else SiLSPath(*res, self.lam, normal=False)

    def f(self, i):
        r = AffineWeylElem.simple(self.cartan, i)
        res = _root_f(self.elems, self.cuts, self.slopes(i), lambda x: r * x)
        return None if res is None else SiLSPath(*res, self.lam, normal=False)

    def epsilon(self, i):
        return _eps_phi(self.cuts, self.slopes(i))[0]

    def phi(self, i):
        return _eps_phi(self.cuts, self.slopes(i))[1]

    def sort_key(self):
        return (self.cuts, tuple(x.sort_key() for x in self.elems))

    def __repr__(self):
        return f"SiLSPath({self})"

    def __str__(self):
        parts = [f"{x} @ {a}" for x, a in zip(self.elems, self.cuts[1:])]
        return "SiLS{" + "; ".join(parts) + "}"


def eval_path(pi, t):
    return pi.eval(t)


def wt(obj):
    return obj.wt()


def h_data(obj, i):
    return obj.h_data(i)


def root_e(obj, i):
    return obj.e(i)


def root_f(obj, i):
    return obj.f(i)


def eps_phi(obj, i):
    return obj.epsilon(i), obj.phi(i)


def project(eta):
    return eta.project()


def validate_sils(elems, cuts, lam):
    """Return a certified :class:`SiLSPath` or raise the first violated condition."""
    elems = tuple(elems)
    cuts = tuple(Fraction(a) for a in cuts)
    if not elems:
        raise BadCuts("empty path")
    _check_cuts(cuts, len(elems))
    J = J_of(lam)
    for x in elems:
        if not is_peterson_rep(x, J):
            raise NotAPetersonRep(f"{x} is not a Peterson representative for J={sorted(J)}")
    for u in range(len(elems) - 1):
        if elems[u] == elems[u + 1]:
            raise NotDecreasing(f"x_{u + 1} equals x_{u + 2}")
        if not has_path(elems[u + 1], elems[u], J, lam, cuts[u + 1]):
            raise NotDecreasing(
                f"no path from x_{u + 2} to x_{u + 1} in SiB(lambda; {cuts[u + 1]})"
            )
    return SiLSPath(elems, cuts, lam, normal=False)


def is_valid_sils(eta):
    try:
        validate_sils(eta.elems, eta.cuts, eta.lam)
    except InvalidPath:
        return False
    except NotAPetersonRep:
        return False
    return True


def n_lambda(cartan, lam):
    """Least common multiple of the nonzero ``<alpha^v, lam>``, ``alpha`` in ``Delta^+``."""
    vals = [abs(cartan.pair_coroot_weight(k, lam)) for k in range(cartan.num_positive)]
    vals = [int(v) for v in vals if v != 0]
    return lcm(*vals) if vals else 1


def sigma_N(eta, N):
    """``sigma_N(eta)``: ``eta_{x_u}`` repeated ``N (a_u - a_{u-1})`` times, as a tuple."""
    ks = [N * a for a in eta.cuts]
    if any(Fraction(k).denominator != 1 for k in ks):
        raise BadMultiple(f"N={N} does not clear the cuts {eta.cuts}")
    out = []
    for u, x in enumerate(eta.elems):
        out.extend([SiLSPath.straight(x, eta.lam)] * int(ks[u + 1] - ks[u]))
    return tuple(out)


def straight_projection(x, lam):
    """``eta_{Pi^J(x)}`` for arbitrary ``x`` in ``W_af``."""
    return SiLSPath.straight(proj_J(x, J_of(lam)), lam)
