"""Untwisted affine root data in exact integer arithmetic.

Indexing follows the usual affine convention: ``I_af = {0, 1, ..., n}`` with
``0`` the affine node, and ``I = {1, ..., n}`` the finite Dynkin diagram
(Bourbaki numbering, except that G2 puts the long root first so that the
marks read ``(1, 2, 3)``).

Finite roots and coweights are plain integer tuples of length ``n`` holding
coordinates over the simple roots and simple coroots respectively; position
``k`` of such a tuple refers to node ``k + 1``.
"""

from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import NamedTuple

from .errors import DimensionMismatch, NotARoot, UnsupportedType

_POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class AffineRoot(NamedTuple):
    """The real affine root ``finite + n*delta``."""

    finite: tuple
    n: int

    def __str__(self):
        return format_affine_root(self)


class LevelZeroWeight:
    """A level-zero weight ``sum_i fun[i-1] * varpi_i + delta_coeff * delta``.

    ``fun`` holds the pairings with the simple coroots ``alpha_1^v..alpha_n^v``.
    Entries may be ints or Fractions; the class never touches floats.
    """

    __slots__ = ("fun", "delta", "_hash")

    def __init__(self, fun, delta=0):
        self.fun = tuple(fun)
        self.delta = delta
        self._hash = None

    @classmethod
    def zero(cls, rank):
        return cls((0,) * rank, 0)

    @classmethod
    def from_fundamental(cls, coeffs):
        """``sum_i coeffs[i-1] varpi_i`` with zero delta part."""
        return cls(tuple(coeffs), 0)

    @property
    def rank(self):
        return len(self.fun)

    def _check(self, other):
        if len(self.fun) != len(other.fun):
            raise DimensionMismatch("weights of different rank")

    def __add__(self, other):
        self._check(other)
        return LevelZeroWeight(
            tuple(a + b for a, b in zip(self.fun, other.fun)), self.delta + other.delta
        )

    def __sub__(self, other):
        self._check(other)
        return LevelZeroWeight(
            tuple(a - b for a, b in zip(self.fun, other.fun)), self.delta - other.delta
        )

    def __neg__(self):
        return LevelZeroWeight(tuple(-a for a in self.fun), -self.delta)

    def __mul__(self, c):
        return LevelZeroWeight(tuple(c * a for a in self.fun), c * self.delta)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LevelZeroWeight):
            return NotImplemented
        return self.fun == other.fun and self.delta == other.delta

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.fun, self.delta))
        return self._hash

    def is_integral(self):
        return all(Fraction(a).denominator == 1 for a in self.fun) and (
            Fraction(self.delta).denominator == 1
        )

    def normalized(self):
        """Same weight with every integral entry stored as ``int``."""
        return LevelZeroWeight(tuple(_norm(a) for a in self.fun), _norm(self.delta))

    def __repr__(self):
        return f"LevelZeroWeight({list(self.fun)!r}, {self.delta!r})"

    def __str__(self):
        return format_weight(self)


def _norm(a):
    a = Fraction(a)
    return a.numerator if a.denominator == 1 else a


def _coeff_str(c, symbol):
    c = Fraction(c)
    if c == 1:
        return symbol
    if c == -1:
        return "−" + symbol
    s = str(c).replace("-", "−")
    return s + symbol


def format_weight(mu):
    """Render as e.g. ``ϖ_1``, ``−ϖ_1+δ``, ``2ϖ_1−2δ`` or ``0``."""
    terms = []
    for k, c in enumerate(mu.fun):
        if c != 0:
            terms.append(_coeff_str(c, f"ϖ_{k + 1}"))
    if mu.delta != 0:
        terms.append(_coeff_str(mu.delta, "δ"))
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("−") else "+" + t
    return out


def format_affine_root(beta):
    """Render as e.g. ``α_1+α_2``, ``−α_1+δ``; in rank one the root is just ``α``."""
    parts = []
    for k, c in enumerate(beta.finite):
        if c:
            name = "α" if len(beta.finite) == 1 else f"α_{k + 1}"
            parts.append(_coeff_str(c, name))
    if beta.n:
        parts.append(_coeff_str(beta.n, "δ"))
    out = parts[0] if parts else "0"
    for t in parts[1:]:
        out += t if t.startswith("−") else "+" + t
    return out


def _finite_cartan(type_label, n):
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        # 1-based node labels; A[i][j] = <alpha_i^v, alpha_j>
        A[i - 1][j - 1] = aij
        A[j - 1][i - 1] = aji

    if type_label == "A":
        for i in range(1, n):
            bond(i, i + 1)
    elif type_label == "B":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, -1, -2)
    elif type_label == "C":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, -2, -1)
    elif type_label == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif type_label == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, n):
            bond(i, i + 1)
    elif type_label == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif type_label == "G":
        bond(1, 2, -1, -3)
    return tuple(tuple(row) for row in A)


def _valid(type_label, n):
    if not isinstance(n, int) or n < 1:
        return False
    return {
        "A": n >= 1,
        "B": n >= 3,
        "C": n >= 2,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }.get(type_label, False)


class AffineCartanData:
    """Static tables of an untwisted affine root system.

    Public attributes:

    ``type_label``, ``rank``
        The finite type and its rank ``n``.
    ``cartan_matrix``
        The affine Cartan matrix indexed by ``I_af``.
    ``finite_cartan``
        Its restriction to ``I``, entry ``[i-1][j-1] = <alpha_i^v, alpha_j>``.
    ``marks``, ``comarks``
        ``a_0..a_n`` and ``a_0^v..a_n^v``.
    ``positive_roots``, ``highest_root``, ``symmetrizer``
        As their names say; roots are coordinate tuples.

    Every finite root has an integer index: ``0 <= k < N`` for the positive
    roots in ``positive_roots`` order and ``k + N`` for ``-positive_roots[k]``.
    """

    def __init__(self, type_label, rank):
        if not _valid(type_label, rank):
            raise UnsupportedType(f"{type_label}{rank} is not an untwisted affine type")
        self.type_label = type_label
        self.rank = n = rank
        self.finite_cartan = A = _finite_cartan(type_label, n)
        self.symmetrizer = self._symmetrize()

        roots = self._close_roots()
        pos = sorted((r for r in roots if all(c >= 0 for c in r)), key=lambda r: (sum(r), r))
        expected = _POSITIVE_ROOT_COUNTS[type_label](n)
        if len(pos) != expected:
            raise AssertionError(f"root closure gave {len(pos)} positive roots, expected {expected}")
        self.positive_roots = tuple(pos)
        self.num_positive = N = len(pos)
        self.roots = self.positive_roots + tuple(tuple(-c for c in r) for r in pos)
        self.root_index = {r: k for k, r in enumerate(self.roots)}
        self.highest_root = pos[-1]
        if len(pos) > 1 and sum(pos[-2]) == sum(pos[-1]):
            raise AssertionError("highest root is not unique")

        self.root_fun = tuple(
            tuple(sum(A[i][j] * r[j] for j in range(n)) for i in range(n)) for r in self.roots
        )
        self.coroots = tuple(self._coroot_coords(r) for r in self.roots)
        self.simple = tuple(self.root_index[self.unit(i)] for i in range(1, n + 1))
        self.theta_index = self.root_index[self.highest_root]
        self.theta_coroot = self.coroots[self.theta_index]

        self.marks = (1,) + tuple(self.highest_root)
        self.comarks = (1,) + tuple(self.theta_coroot)
        theta_fun = self.root_fun[self.theta_index]
        full = [[0] * (n + 1) for _ in range(n + 1)]
        full[0][0] = 2
        for i in range(n):
            full[i + 1][0] = -theta_fun[i]
            full[0][i + 1] = -sum(self.theta_coroot[j] * A[j][i] for j in range(n))
            for j in range(n):
                full[i + 1][j + 1] = A[i][j]
        self.cartan_matrix = tuple(tuple(row) for row in full)

        # permutation of root indices under each finite simple reflection
        self.simple_perms = tuple(
            tuple(self.root_index[self.reflect_root(r, i)] for r in self.roots)
            for i in range(1, n + 1)
        )

    def __repr__(self):
        return f"AffineCartanData({self.type_label!r}, {self.rank})"

    def __reduce__(self):
        return (build_cartan, (self.type_label, self.rank))

    @property
    def I(self):
        return tuple(range(1, self.rank + 1))

    @property
    def I_af(self):
        return tuple(range(0, self.rank + 1))

    def unit(self, i):
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def zero(self):
        return (0,) * self.rank

    def _symmetrize(self):
        n, A = self.rank, self.finite_cartan
        d = [None] * n
        d[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and A[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * A[i][j] / A[j][i]
                    stack.append(j)
        m = lcm(*(x.denominator for x in d))
        d = [int(x * m) for x in d]
        for i in range(n):
            for j in range(n):
                assert d[i] * A[i][j] == d[j] * A[j][i]
        return tuple(d)

    def reflect_root(self, r, i):
        """``r_i(r) = r - <alpha_i^v, r> alpha_i`` for ``i`` in ``I``."""
        A = self.finite_cartan
        c = sum(A[i - 1][j] * r[j] for j in range(self.rank))
        return tuple(x - c if k == i - 1 else x for k, x in enumerate(r))

    def _close_roots(self):
        seen = {self.unit(i) for i in range(1, self.rank + 1)}
        todo = list(seen)
        while todo:
            r = todo.pop()
            for i in range(1, self.rank + 1):
                s = self.reflect_root(r, i)
                if s not in seen:
                    seen.add(s)
                    todo.append(s)
        return seen

    def norm2(self, r):
        """``(r, r)`` in the normalization where ``(alpha_i, alpha_i) = 2 d_i``."""
        n, A, d = self.rank, self.finite_cartan, self.symmetrizer
        return sum(r[i] * d[i] * A[i][j] * r[j] for i in range(n) for j in range(n))

    def _coroot_coords(self, r):
        q = self.norm2(r)
        out = []
        for j, c in enumerate(r):
            num = 2 * c * self.symmetrizer[j]
            if num % q:
                raise AssertionError("non-integral coroot")
            out.append(num // q)
        return tuple(out)

    def is_root(self, r):
        return tuple(r) in self.root_index

    def index_of(self, r):
        try:
            return self.root_index[tuple(r)]
        except KeyError:
            raise NotARoot(f"{r} is not a root of {self.type_label}{self.rank}") from None

    def is_positive(self, k):
        return k < self.num_positive

    def neg(self, k):
        N = self.num_positive
        return k + N if k < N else k - N

    def height(self, r):
        return sum(r)

    def pair_coweight_root(self, xi, k):
        """``<xi, alpha>`` for the root with index ``k``."""
        return sum(a * b for a, b in zip(xi, self.root_fun[k]))

    def pair_coroot_weight(self, k, mu):
        """``<alpha^v, mu>`` for the root with index ``k``; delta never contributes."""
        return sum(a * b for a, b in zip(self.coroots[k], mu.fun))

    def pair_simple(self, i, mu):
        """``<alpha_i^v, mu>`` for ``i`` in ``I_af`` and level-zero ``mu``."""
        if i == 0:
            return -sum(a * b for a, b in zip(self.theta_coroot, mu.fun))
        return mu.fun[i - 1]

    def root_weight(self, k):
        """The finite root with index ``k`` as a level-zero weight."""
        return LevelZeroWeight(self.root_fun[k], 0)

    def fundamental(self, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != self.rank:
            raise DimensionMismatch(f"expected {self.rank} coordinates, got {len(coeffs)}")
        return LevelZeroWeight(coeffs, 0)

    def simple_affine_root(self, i):
        if i == 0:
            return AffineRoot(tuple(-c for c in self.highest_root), 1)
        return AffineRoot(self.unit(i), 0)

    def is_positive_affine(self, beta):
        return beta.n > 0 or (beta.n == 0 and all(c >= 0 for c in beta.finite))


@lru_cache(maxsize=None)
def build_cartan(type_label, rank):
    """Return the (shared, immutable) root data of type ``type_label`` rank ``rank``."""
    return AffineCartanData(type_label.upper() if isinstance(type_label, str) else type_label, rank)


def pairing(cartan, xi, mu):
    """Canonical pairing of a coweight with a level-zero weight or a finite root.

    ``mu`` may be a :class:`LevelZeroWeight` or a coordinate tuple over the
    simple roots. The result is exact (int or Fraction).
    """
    xi = tuple(xi)
    if len(xi) != cartan.rank:
        raise DimensionMismatch("coweight has wrong rank")
    if isinstance(mu, LevelZeroWeight):
        if mu.rank != cartan.rank:
            raise DimensionMismatch("weight has wrong rank")
        return sum(a * b for a, b in zip(xi, mu.fun))
    mu = tuple(mu)
    if len(mu) != cartan.rank:
        raise DimensionMismatch("root has wrong rank")
    A, n = cartan.finite_cartan, cartan.rank
    return sum(xi[i] * A[i][j] * mu[j] for i in range(n) for j in range(n))


def coroot_of(cartan, alpha):
    """The coroot of the finite root ``alpha`` in simple-coroot coordinates."""
    return cartan.coroots[cartan.index_of(alpha)]


def root_to_weight(cartan, alpha):
    """Finite root (coordinate tuple) as a level-zero weight."""
    return cartan.root_weight(cartan.index_of(alpha))


def rho(cartan, J=None):
    """``rho`` (``J is None``) or ``rho_J``, as a level-zero weight.

    Coordinates are exact and may be half-integers for ``rho_J``.
    """
    if J is None:
        return LevelZeroWeight((1,) * cartan.rank, 0)
    J = frozenset(J)
    total = [0] * cartan.rank
    for k, r in enumerate(cartan.positive_roots):
        if all(c == 0 or (idx + 1) in J for idx, c in enumerate(r)):
            for i, v in enumerate(cartan.root_fun[k]):
                total[i] += v
    return LevelZeroWeight(tuple(_norm(Fraction(v, 2)) for v in total), 0)
