"""The affine Weyl group ``W_af = W ⋉ {t_xi}`` in exact arithmetic.

A finite Weyl group element is stored as the permutation it induces on the
finite root system (indexed as in :class:`~silpath.cartan.AffineCartanData`).
This action is faithful, so equality of permutations is equality of group
elements. An affine element ``w t_xi`` is the pair ``(w, xi)``.
"""

from functools import lru_cache

from .cartan import AffineRoot, LevelZeroWeight
from .errors import DimensionMismatch, NotARealRoot


class FiniteWeylElem:
    """Element of the finite Weyl group, stored as a permutation of root indices."""

    __slots__ = ("cartan", "perm", "_hash")

    def __init__(self, cartan, perm):
        self.cartan = cartan
        self.perm = tuple(perm)
        self._hash = hash(self.perm)

    @classmethod
    def identity(cls, cartan):
        return cls(cartan, range(2 * cartan.num_positive))

    @classmethod
    def simple(cls, cartan, i):
        return cls(cartan, cartan.simple_perms[i - 1])

    @classmethod
    def from_word(cls, cartan, word):
        """``r_{i_1} r_{i_2} ... r_{i_k}`` for ``word = [i_1, ..., i_k]``."""
        w = cls.identity(cartan)
        for i in word:
            w = w * cls.simple(cartan, i)
        return w

    @classmethod
    def reflection(cls, cartan, k):
        """The reflection in the finite root with index ``k``."""
        return cls(cartan, _reflection_perm(cartan, k))

    def __mul__(self, other):
        if other.cartan is not self.cartan:
            raise DimensionMismatch("Weyl elements over different root data")
        p = self.perm
        return FiniteWeylElem(self.cartan, tuple(p[k] for k in other.perm))

    def inverse(self):
        inv = [0] * len(self.perm)
        for k, j in enumerate(self.perm):
            inv[j] = k
        return FiniteWeylElem(self.cartan, inv)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteWeylElem)
            and other.cartan is self.cartan
            and other.perm == self.perm
        )

    def __hash__(self):
        return self._hash

    def is_identity(self):
        return all(k == j for k, j in enumerate(self.perm))

    def act_root_index(self, k):
        return self.perm[k]

    def act_on_root(self, alpha):
        c = self.cartan
        return c.roots[self.perm[c.index_of(alpha)]]

    def act_on_coweight(self, xi):
        """``w(sum_i xi_i alpha_i^v) = sum_i xi_i (w alpha_i)^v``."""
        c = self.cartan
        out = [0] * c.rank
        for i, coeff in enumerate(xi):
            if coeff:
                cor = c.coroots[self.perm[c.simple[i]]]
                for j in range(c.rank):
                    out[j] += coeff * cor[j]
        return tuple(out)

    def act_on_weight(self, mu):
        """Finite part of the action; the delta coefficient is untouched."""
        c = self.cartan
        inv = self.inverse().perm
        fun = tuple(
            sum(a * b for a, b in zip(c.coroots[inv[c.simple[j]]], mu.fun))
            for j in range(c.rank)
        )
        return LevelZeroWeight(fun, mu.delta)

    def length(self):
        N = self.cartan.num_positive
        return sum(1 for k in range(N) if self.perm[k] >= N)

    def has_left_descent(self, i):
        """True iff ``l(r_i w) < l(w)``, i.e. ``w^{-1} alpha_i`` is negative."""
        c = self.cartan
        s = c.simple[i - 1]
        return self.perm.index(s) >= c.num_positive

    def has_right_descent(self, i):
        """True iff ``l(w r_i) < l(w)``, i.e. ``w alpha_i`` is negative."""
        c = self.cartan
        return self.perm[c.simple[i - 1]] >= c.num_positive

    def reduced_word(self):
        """Reduced word, found by repeatedly stripping the smallest left descent."""
        word = []
        w = self
        while not w.is_identity():
            for i in range(1, self.cartan.rank + 1):
                if w.has_left_descent(i):
                    word.append(i)
                    w = FiniteWeylElem.simple(self.cartan, i) * w
                    break
        return word

    def __repr__(self):
        return f"FiniteWeylElem({self.reduced_word()})"


@lru_cache(maxsize=None)
def _reflection_perm(cartan, k):
    cor = cartan.coroots[k]
    alpha = cartan.roots[k]
    out = []
    for r in cartan.roots:
        p = sum(cor[i] * cartan.finite_cartan[i][j] * r[j]
                for i in range(cartan.rank) for j in range(cartan.rank))
        out.append(cartan.root_index[tuple(x - p * a for x, a in zip(r, alpha))])
    return tuple(out)


class AffineWeylElem:
    """The element ``w t_xi`` of the affine Weyl group."""

    __slots__ = ("w", "xi", "_hash")

    def __init__(self, w, xi):
        xi = tuple(xi)
        if len(xi) != w.cartan.rank:
            raise DimensionMismatch("coweight has wrong rank")
        self.w = w
        self.xi = xi
        self._hash = hash((w.perm, xi))

    @property
    def cartan(self):
        return self.w.cartan

    @classmethod
    def identity(cls, cartan):
        return cls(FiniteWeylElem.identity(cartan), cartan.zero())

    @classmethod
    def translation(cls, cartan, xi):
        return cls(FiniteWeylElem.identity(cartan), xi)

    @classmethod
    def finite(cls, w):
        return cls(w, w.cartan.zero())

    @classmethod
    def simple(cls, cartan, i):
        """``r_i`` for ``i`` in ``I_af``; ``r_0 = r_theta t_{-theta^v}``."""
        if i == 0:
            return cls(
                FiniteWeylElem.reflection(cartan, cartan.theta_index),
                tuple(-c for c in cartan.theta_coroot),
            )
        return cls(FiniteWeylElem.simple(cartan, i), cartan.zero())

    @classmethod
    def from_word(cls, cartan, word):
        x = cls.identity(cartan)
        for i in word:
            x = x * cls.simple(cartan, i)
        return x

    def __mul__(self, other):
        """``(w t_xi)(v t_zeta) = wv t_{v^{-1} xi + zeta}``."""
        if other.cartan is not self.cartan:
            raise DimensionMismatch("Weyl elements over different root data")
        v = other.w
        moved = v.inverse().act_on_coweight(self.xi)
        return AffineWeylElem(self.w * v, tuple(a + b for a, b in zip(moved, other.xi)))

    def inverse(self):
        winv = self.w.inverse()
        return AffineWeylElem(winv, tuple(-c for c in self.w.act_on_coweight(self.xi)))

    def __eq__(self, other):
        return (
            isinstance(other, AffineWeylElem)
            and other.w == self.w
            and other.xi == self.xi
        )

    def __hash__(self):
        return self._hash

    def is_identity(self):
        return self.w.is_identity() and not any(self.xi)

    def is_translation(self):
        return self.w.is_identity()

    def sort_key(self):
        return (self.w.perm, self.xi)

    def act_on_weight(self, mu):
        """``w t_xi mu = w mu - <xi, mu> delta`` for level-zero ``mu``."""
        p = sum(a * b for a, b in zip(self.xi, mu.fun))
        nu = self.w.act_on_weight(mu)
        return LevelZeroWeight(nu.fun, nu.delta - p)

    def act_on_affine_root(self, beta):
        """``w t_xi (alpha + n delta) = w alpha + (n - <xi, alpha>) delta``."""
        c = self.cartan
        k = c.index_of(beta.finite)
        return AffineRoot(c.roots[self.w.perm[k]], beta.n - c.pair_coweight_root(self.xi, k))

    def length(self):
        """Iwahori-Matsumoto formula ``sum_{a>0} |<xi, a> + [w a < 0]|``."""
        c = self.cartan
        N = c.num_positive
        total = 0
        for k in range(N):
            v = c.pair_coweight_root(self.xi, k)
            if self.w.perm[k] >= N:
                v += 1
            total += abs(v)
        return total

    def sil(self):
        """Semi-infinite length ``l(w) + 2 <xi, rho>``."""
        return self.w.length() + 2 * sum(self.xi)

    def has_left_descent(self, i):
        return not self.cartan.is_positive_affine(
            self.inverse().act_on_affine_root(self.cartan.simple_affine_root(i))
        )

    def has_right_descent(self, i):
        return not self.cartan.is_positive_affine(
            self.act_on_affine_root(self.cartan.simple_affine_root(i))
        )

    def reduced_word(self):
        """A reduced word over ``I_af`` (smallest left descent first)."""
        word = []
        x = self
        c = self.cartan
        while not x.is_identity():
            for i in c.I_af:
                if x.has_left_descent(i):
                    word.append(i)
                    x = AffineWeylElem.simple(c, i) * x
                    break
        return word

    def __repr__(self):
        return f"AffineWeylElem({self})"

    def __str__(self):
        word = " ".join(str(i) for i in self.w.reduced_word())
        return f"w=[{word}] t=[{','.join(str(c) for c in self.xi)}]"


def mul(x, y):
    return x * y


def inverse(x):
    return x.inverse()


def act_on_weight(x, mu):
    return x.act_on_weight(mu)


def act_on_affine_root(x, beta):
    return x.act_on_affine_root(beta)


def reflection(cartan, beta):
    """``r_beta = r_alpha t_{n alpha^v}`` for the real affine root ``beta = alpha + n delta``."""
    alpha = tuple(beta.finite)
    if not any(alpha) or not cartan.is_root(alpha):
        raise NotARealRoot(f"{beta} is not a real affine root")
    k = cartan.index_of(alpha)
    return AffineWeylElem(
        FiniteWeylElem.reflection(cartan, k), tuple(beta.n * c for c in cartan.coroots[k])
    )


def length(x):
    return x.length()


def sil(x):
    return x.sil()


def min_coset_rep(w, J):
    """The minimal representative of ``w W_J``, by stripping right descents in ``J``."""
    J = sorted(J)
    changed = True
    while changed:
        changed = False
        for j in J:
            if w.has_right_descent(j):
                w = w * FiniteWeylElem.simple(w.cartan, j)
                changed = True
    return w


def sil_J(x, J):
    """``l(floor(w)) + 2 <xi, rho - rho_J>`` for ``x = w t_xi``."""
    from .cartan import rho

    c = x.cartan
    diff = rho(c) - rho(c, J)
    return min_coset_rep(x.w, J).length() + 2 * sum(a * b for a, b in zip(x.xi, diff.fun))


@lru_cache(maxsize=200000)
def bruhat_leq(x, y):
    """Ordinary Bruhat order on ``W_af``.

    Uses the lifting property: if ``s`` is a right descent of ``y`` then
    ``x <= y`` iff ``min(x, xs) <= ys``.
    """
    lx, ly = x.length(), y.length()
    if lx > ly:
        return False
    if ly == 0:
        return x.is_identity()
    if lx == ly:
        return x == y
    c = y.cartan
    for i in c.I_af:
        if y.has_right_descent(i):
            s = AffineWeylElem.simple(c, i)
            ys = y * s
            if x.has_right_descent(i):
                return bruhat_leq(x * s, ys)
            return bruhat_leq(x, ys)
    raise AssertionError("nonidentity element without right descent")
