"""Parabolic subsets ``J`` of ``I``, Peterson's coset representatives and related maps."""

from functools import lru_cache

from .cartan import AffineRoot, rho
from .errors import NotAPetersonRep
from .weyl import AffineWeylElem, min_coset_rep, reflection

__all__ = [
    "ParabolicSubset",
    "parabolic",
    "min_coset_rep",
    "is_peterson_rep",
    "proj_J",
    "adjust",
    "z_xi",
    "is_J_adjusted",
    "project_Jc",
    "peterson_decompose",
    "T",
]


class ParabolicSubset:
    """A subset ``J`` of ``I`` together with its derived root data.

    ``subsystem_simple`` lists the affine roots ``S_J``: the simple roots
    ``alpha_j`` (``j`` in ``J``) and ``delta - theta_K`` for each connected
    component ``K`` of the Dynkin subdiagram on ``J``.
    """

    def __init__(self, cartan, J):
        self.cartan = cartan
        self.J = frozenset(J)
        if not self.J <= set(cartan.I):
            raise ValueError(f"J={sorted(J)} is not a subset of I")
        self.Jc = frozenset(cartan.I) - self.J
        self.positive_root_indices = tuple(
            k for k, r in enumerate(cartan.positive_roots)
            if all(c == 0 or (i + 1) in self.J for i, c in enumerate(r))
        )
        self.components = self._components()
        thetas = []
        for K in self.components:
            best = None
            for k in self.positive_root_indices:
                r = cartan.roots[k]
                if all(c == 0 or (i + 1) in K for i, c in enumerate(r)):
                    if best is None or sum(r) > sum(cartan.roots[best]):
                        best = k
            thetas.append(best)
        self.component_highest = tuple(thetas)
        self.subsystem_simple = tuple(
            [AffineRoot(cartan.unit(j), 0) for j in sorted(self.J)]
            + [AffineRoot(tuple(-c for c in cartan.roots[k]), 1) for k in thetas]
        )
        self.rho_J = rho(cartan, self.J)

    def _components(self):
        A = self.cartan.finite_cartan
        left = set(self.J)
        comps = []
        while left:
            start = min(left)
            comp, stack = {start}, [start]
            while stack:
                i = stack.pop()
                for j in list(left):
                    if j not in comp and A[i - 1][j - 1] != 0:
                        comp.add(j)
                        stack.append(j)
            left -= comp
            comps.append(frozenset(comp))
        return tuple(comps)

    def contains_root_index(self, k):
        """True iff the finite root with index ``k`` lies in ``Delta_J``."""
        r = self.cartan.roots[k]
        return all(c == 0 or (i + 1) in self.J for i, c in enumerate(r))

    def __eq__(self, other):
        return isinstance(other, ParabolicSubset) and self.cartan is other.cartan and self.J == other.J

    def __hash__(self):
        return hash(self.J)

    def __repr__(self):
        return f"ParabolicSubset({sorted(self.J)})"


@lru_cache(maxsize=None)
def _parabolic_cached(cartan, J):
    return ParabolicSubset(cartan, J)


def parabolic(cartan, J):
    """Shared :class:`ParabolicSubset` for ``J``; accepts a ParabolicSubset too."""
    if isinstance(J, ParabolicSubset):
        return J
    return _parabolic_cached(cartan, frozenset(J))


def is_peterson_rep(x, J):
    """True iff ``x`` maps every positive root of ``(Delta_J)_af`` to a positive affine root.

    Checking the roots ``S_J`` suffices because every positive root of the
    subsystem is a nonnegative combination of them.
    """
    P = parabolic(x.cartan, J)
    c = x.cartan
    return all(c.is_positive_affine(x.act_on_affine_root(s)) for s in P.subsystem_simple)


def proj_J(x, J):
    """``Pi^J(x)``: the Peterson representative of ``x (W_J)_af``."""
    P = parabolic(x.cartan, J)
    return _proj_cached(x, P.J)


@lru_cache(maxsize=200000)
def _proj_cached(x, J):
    P = parabolic(x.cartan, J)
    c = x.cartan
    changed = True
    while changed:
        changed = False
        for s in P.subsystem_simple:
            if not c.is_positive_affine(x.act_on_affine_root(s)):
                x = x * reflection(c, s)
                changed = True
    return x


def adjust(cartan, xi, J):
    """Return ``(phi_J(xi), z_xi)`` read off from ``Pi^J(t_xi) = z_xi t_{xi + phi}``."""
    y = proj_J(AffineWeylElem.translation(cartan, xi), J)
    phi = tuple(a - b for a, b in zip(y.xi, xi))
    return phi, y.w


def z_xi(cartan, xi, J):
    return adjust(cartan, xi, J)[1]


def is_J_adjusted(cartan, xi, J):
    """``<xi, gamma>`` lies in ``{-1, 0}`` for every ``gamma`` in ``Delta_J^+``."""
    P = parabolic(cartan, J)
    return all(cartan.pair_coweight_root(xi, k) in (-1, 0) for k in P.positive_root_indices)


def project_Jc(xi, J):
    """Coordinate projection ``Q^v -> Q^v_{J^c}`` (zero the ``J`` coordinates)."""
    J = parabolic_J(J)
    return tuple(0 if (i + 1) in J else c for i, c in enumerate(xi))


def parabolic_J(J):
    return J.J if isinstance(J, ParabolicSubset) else frozenset(J)


def peterson_decompose(x, J):
    """Write a Peterson representative as ``w z_xi t_xi``; returns ``(w, xi)``."""
    if not is_peterson_rep(x, J):
        raise NotAPetersonRep(f"{x} is not in (W^J)_af for J={sorted(parabolic_J(J))}")
    z = z_xi(x.cartan, x.xi, J)
    return x.w * z.inverse(), x.xi


def T(cartan, xi, J):
    """``T_xi = z_xi t_xi`` for a J-adjusted ``xi`` (equivalently ``Pi^J(t_xi)``)."""
    return proj_J(AffineWeylElem.translation(cartan, xi), J)


def from_peterson(w, xi, J):
    """Inverse of :func:`peterson_decompose`: ``w z_xi t_xi``."""
    z = z_xi(w.cartan, xi, J)
    return AffineWeylElem(w * z, xi)

