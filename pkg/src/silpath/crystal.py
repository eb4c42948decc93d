"""Finite crystal balls, tensor products, the Weyl group action and component data.

A crystal node is any hashable object with methods ``e(i)``, ``f(i)``
(returning a node or None), ``epsilon(i)``, ``phi(i)``, ``weight()`` and
``sort_key()``; :class:`~silpath.paths.SiLSPath` and
:class:`~silpath.paths.PLPath` both qualify, as do the wrappers below.
"""

import itertools
from collections import Counter, deque
from fractions import Fraction

from .cartan import LevelZeroWeight
from .errors import BudgetExceeded, NotCanonicalForm
from .graphs import J_of, jc_a
from .parabolic import T, adjust, is_J_adjusted
from .paths import PLPath, SiLSPath
from .weyl import AffineWeylElem


class TensorElem:
    """``b_1 ⊗ ... ⊗ b_N`` with Kashiwara's tensor product rule.

    Operators are routed by the signature rule: list ``-`` ``eps`` times then
    ``+`` ``phi`` times for each factor left to right, cancel ``+-`` pairs;
    ``f_i`` acts on the factor owning the leftmost surviving ``+`` and
    ``e_i`` on the factor owning the rightmost surviving ``-``.
    """

    __slots__ = ("factors", "_hash")

    def __init__(self, factors):
        self.factors = tuple(factors)
        if not self.factors:
            raise ValueError("empty tensor product")
        self._hash = hash(self.factors)

    @property
    def cartan(self):
        return self.factors[0].cartan

    def __eq__(self, other):
        return isinstance(other, TensorElem) and self.factors == other.factors

    def __hash__(self):
        return self._hash

    def _signature(self, i):
        """Return (surviving minus owners, surviving plus owners)."""
        minus, plus = [], []
        for k, b in enumerate(self.factors):
            for _ in range(b.epsilon(i)):
                if plus:
                    plus.pop()
                else:
                    minus.append(k)
            plus.extend([k] * b.phi(i))
        return minus, plus

    def epsilon(self, i):
        return len(self._signature(i)[0])

    def phi(self, i):
        return len(self._signature(i)[1])

    def _replace(self, k, new):
        if new is None:
            return None
        f = list(self.factors)
        f[k] = new
        return TensorElem(f)

    def f(self, i):
        plus = self._signature(i)[1]
        if not plus:
            return None
        k = plus[0]
        return self._replace(k, self.factors[k].f(i))

    def e(self, i):
        minus = self._signature(i)[0]
        if not minus:
            return None
        k = minus[-1]
        return self._replace(k, self.factors[k].e(i))

    def weight(self):
        w = self.factors[0].weight()
        for b in self.factors[1:]:
            w = w + b.weight()
        return w

    wt = weight

    def sort_key(self):
        return tuple(b.sort_key() for b in self.factors)

    def __repr__(self):
        return f"TensorElem({self})"

    def __str__(self):
        return " ⊗ ".join(str(b) for b in self.factors)


def tensor_ops(t, i):
    """``(e_i t, f_i t, eps_i t, phi_i t)`` for a tensor element."""
    return t.e(i), t.f(i), t.epsilon(i), t.phi(i)


class PartitionTuple:
    """One partition per ``i`` in ``I``; ``rho^(i)`` has fewer than ``m_i`` parts."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple(tuple(p) for p in parts)
        for p in self.parts:
            if any(x <= 0 for x in p) or list(p) != sorted(p, reverse=True):
                raise ValueError(f"{p} is not a partition")

    @classmethod
    def empty(cls, rank):
        return cls([()] * rank)

    def size(self):
        return sum(sum(p) for p in self.parts)

    def fits(self, lam):
        return all(len(p) < max(m, 1) or not p for p, m in zip(self.parts, lam.fun))

    def __eq__(self, other):
        return isinstance(other, PartitionTuple) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"PartitionTuple({[list(p) for p in self.parts]})"

    def __str__(self):
        return "(" + ", ".join("(" + ",".join(map(str, p)) + ")" for p in self.parts) + ")"


def partitions_bounded(total, max_len, max_part=None):
    """Partitions of ``total`` with at most ``max_len`` parts, largest first."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_bounded(total - first, max_len - 1, first):
            yield (first,) + rest


def par_elements(lam, bound):
    """All of ``Par(lam)`` with total size at most ``bound``, smallest first."""
    lengths = [max(int(m) - 1, 0) for m in lam.fun]
    out = []
    for total in range(bound + 1):
        for split in itertools.product(range(total + 1), repeat=len(lengths)):
            if sum(split) != total:
                continue
            choices = [list(partitions_bounded(s, L)) for s, L in zip(split, lengths)]
            for combo in itertools.product(*choices):
                out.append(PartitionTuple(combo))
    return out


class ParNode:
    """``rho ⊗ b`` in ``Par(lam) ⊗ B``: operators act on ``b``, weight shifts by ``-|rho| delta``."""

    __slots__ = ("rho", "b", "_hash")

    def __init__(self, rho, b):
        self.rho = rho
        self.b = b
        self._hash = hash((rho, b))

    @property
    def cartan(self):
        return self.b.cartan

    def __eq__(self, other):
        return isinstance(other, ParNode) and self.rho == other.rho and self.b == other.b

    def __hash__(self):
        return self._hash

    def e(self, i):
        n = self.b.e(i)
        return None if n is None else ParNode(self.rho, n)

    def f(self, i):
        n = self.b.f(i)
        return None if n is None else ParNode(self.rho, n)

    def epsilon(self, i):
        return self.b.epsilon(i)

    def phi(self, i):
        return self.b.phi(i)

    def weight(self):
        w = self.b.weight()
        return LevelZeroWeight(w.fun, w.delta - self.rho.size())

    wt = weight

    def sort_key(self):
        return (self.rho.parts, self.b.sort_key())

    def __str__(self):
        return f"{self.rho} ⊗ {self.b}"


class LabeledCrystalBall:
    """All nodes within operator distance ``depth`` of ``seed``.

    ``nodes[k]`` has id ``k``; ``dist[k]`` is its distance from the seed;
    ``boundary[k]`` is true for nodes at the maximal distance, whose
    neighbours may lie outside. ``edges`` holds ``(src, i, dst)`` with
    ``f_i(src) = dst``.
    """

    def __init__(self, seed, depth):
        self.seed = seed
        self.depth = depth
        self.cartan = seed.cartan
        self.nodes = [seed]
        self.index = {seed: 0}
        self.dist = [0]
        frontier = [0]
        for d in range(1, depth + 1):
            nxt = []
            for k in frontier:
                b = self.nodes[k]
                for op in ("f", "e"):
                    for i in self.cartan.I_af:
                        n = getattr(b, op)(i)
                        if n is not None and n not in self.index:
                            self.index[n] = len(self.nodes)
                            self.nodes.append(n)
                            self.dist.append(d)
                            nxt.append(self.index[n])
            frontier = nxt
        self.boundary = [d == depth for d in self.dist]
        self.edges = []
        for k, b in enumerate(self.nodes):
            for i in self.cartan.I_af:
                n = b.f(i)
                if n is not None and n in self.index:
                    self.edges.append((k, i, self.index[n]))

    def __len__(self):
        return len(self.nodes)

    def interior(self):
        return [k for k in range(len(self.nodes)) if not self.boundary[k]]

    def weight_counts(self, interior_only=False):
        ids = self.interior() if interior_only else range(len(self.nodes))
        return Counter(self.nodes[k].weight() for k in ids)

    def to_dict(self, lam=None):
        from .notation import cartan_dict, format_rational, weight_dict

        c = self.cartan
        return {
            "cartan": cartan_dict(c),
            "lambda": [format_rational(v) for v in lam.fun] if lam is not None else None,
            "nodes": [
                {
                    "id": k,
                    "payload": str(b),
                    "wt": weight_dict(b.weight()),
                    "eps": [b.epsilon(i) for i in c.I_af],
                    "phi": [b.phi(i) for i in c.I_af],
                    "boundary": self.boundary[k],
                }
                for k, b in enumerate(self.nodes)
            ],
            "edges": [{"src": s, "i": i, "dst": d} for s, i, d in self.edges],
        }

    def to_dot(self):
        lines = ["digraph ball {"]
        for k, b in enumerate(self.nodes):
            shape = ", style=dashed" if self.boundary[k] else ""
            lines.append(f'  n{k} [label="{b.weight()}"{shape}];')
        for s, i, d in self.edges:
            lines.append(f'  n{s} -> n{d} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def generate_ball(seed, depth):
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    return LabeledCrystalBall(seed, depth)


class IsoResult:
    """Outcome of :func:`iso_check`. ``witness`` is the operator path to the disagreement."""

    def __init__(self, ok, witness=None, reason="", matched=0, counts_equal=None):
        self.ok = ok
        self.witness = witness
        self.reason = reason
        self.matched = matched
        self.counts_equal = counts_equal

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return f"Isomorphic(matched={self.matched})"
        word = " ".join(f"{op}{i}" for op, i in self.witness or [])
        return f"Mismatch(at [{word}]: {self.reason})"


def _local_data(b, I_af):
    return (
        b.weight(),
        tuple(b.epsilon(i) for i in I_af),
        tuple(b.phi(i) for i in I_af),
    )


def iso_check(A, B, seed_a=0, seed_b=0):
    """Synchronized BFS from the seed pair comparing weights, eps, phi and edges.

    A target inside one ball must correspond to a target inside the other,
    and the correspondence must stay a bijection. Boundary nodes have their
    data compared but their outgoing operators are not followed.
    """
    I_af = A.cartan.I_af
    fwd = {seed_a: seed_b}
    bwd = {seed_b: seed_a}
    path = {seed_a: []}
    queue = deque([seed_a])
    while queue:
        ka = queue.popleft()
        kb = fwd[ka]
        a, b = A.nodes[ka], B.nodes[kb]
        if _local_data(a, I_af) != _local_data(b, I_af):
            return IsoResult(False, path[ka], f"data differ: {a} vs {b}")
        if A.boundary[ka] or B.boundary[kb]:
            if A.boundary[ka] != B.boundary[kb]:
                return IsoResult(False, path[ka], "boundary flags differ")
            continue
        for i in I_af:
            for op in ("f", "e"):
                na = getattr(a, op)(i)
                nb = getattr(b, op)(i)
                if (na is None) != (nb is None):
                    return IsoResult(False, path[ka] + [(op, i)], "operator defined on one side only")
                if na is None:
                    continue
                ia = A.index.get(na)
                ib = B.index.get(nb)
                if (ia is None) != (ib is None):
                    return IsoResult(False, path[ka] + [(op, i)], "target leaves only one ball")
                if ia is None:
                    continue
                if ia in fwd or ib in bwd:
                    if fwd.get(ia) != ib or bwd.get(ib) != ia:
                        return IsoResult(
                            False, path[ka] + [(op, i)],
                            f"correspondence conflict: {A.nodes[ia]} vs {B.nodes[ib]}",
                        )
                    continue
                fwd[ia] = ib
                bwd[ib] = ia
                path[ia] = path[ka] + [(op, i)]
                queue.append(ia)
    if len(fwd) != len(A.nodes) or len(bwd) != len(B.nodes):
        return IsoResult(False, [], "balls have different sizes")
    ca = Counter(A.nodes[k].weight() for k in A.interior())
    cb = Counter(B.nodes[k].weight() for k in B.interior())
    return IsoResult(True, matched=len(fwd), counts_equal=ca == cb)


def reference_seed(cartan, lam):
    """``⊗_i pi_{varpi_i}^{⊗ m_i}`` in the tensor product of LS(varpi_i) crystals."""
    factors = []
    for i, m in enumerate(lam.fun):
        w = LevelZeroWeight(tuple(1 if k == i else 0 for k in range(cartan.rank)), 0)
        factors.extend([PLPath.straight(cartan, w)] * int(m))
    return TensorElem(factors)


def ls_seed(cartan, lam):
    """The straight LS path ``pi_lam``."""
    return PLPath.straight(cartan, lam)


def projection_report(sils_ball, ls_ball):
    """Compare the image of a SiLS ball under projection with an LS ball.

    Returns ``(surjective, collisions)`` where surjective means every LS
    node is the projection of some SiLS node, and collisions lists pairs of
    distinct SiLS nodes with equal projections.
    """
    seen = {}
    collisions = []
    for b in sils_ball.nodes:
        p = b.project()
        if p in seen:
            collisions.append((seen[p], b))
        else:
            seen[p] = b
    surjective = all(p in seen for p in ls_ball.nodes)
    return surjective, collisions


def reflect_node(i, b):
    """``r_i b``: ``f_i^n b`` if ``n = <alpha_i^v, wt b> >= 0``, else ``e_i^{-n} b``."""
    n = b.cartan.pair_simple(i, b.weight())
    for _ in range(abs(n)):
        b = b.f(i) if n > 0 else b.e(i)
    return b


def weyl_action(word, b):
    """``r_{i_1} ... r_{i_p} b`` for ``word = [i_1, ..., i_p]`` (rightmost acts first)."""
    for i in reversed(list(word)):
        b = reflect_node(i, b)
    return b


def extremal_verify(b, L):
    """Bounded extremality check over the Weyl orbit reached by words of length <= L."""
    I_af = b.cartan.I_af
    seen = {b}
    level = [b]
    for step in range(L + 1):
        for y in level:
            mu = y.weight()
            for i in I_af:
                n = y.cartan.pair_simple(i, mu)
                if n >= 0 and y.e(i) is not None:
                    return False
                if n <= 0 and y.f(i) is not None:
                    return False
        if step == L:
            break
        nxt = []
        for y in level:
            for i in I_af:
                z = reflect_node(i, y)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        level = nxt
    return True


def turn_set(lam):
    """``Turn(lam) = {k / m_i | i not in J, 0 <= k <= m_i}``, sorted."""
    out = {Fraction(0), Fraction(1)}
    for m in lam.fun:
        if m:
            out.update(Fraction(k, int(m)) for k in range(int(m) + 1))
    return sorted(out)


def _is_translation_form(x, J):
    """``x = T_xi`` with ``xi`` J-adjusted."""
    c = x.cartan
    return is_J_adjusted(c, x.xi, J) and T(c, x.xi, J) == x


def is_canonical(eta):
    J = eta.J
    return eta.elems[-1].is_identity() and all(_is_translation_form(x, J) for x in eta.elems)


def theta_map(eta):
    """Partition tuple of the component whose canonical member is ``eta``."""
    if not is_canonical(eta):
        raise NotCanonicalForm(f"{eta} is not of the form (T_xi_1, ..., e; a)")
    lam = eta.lam
    tau = turn_set(lam)
    if any(a not in tau for a in eta.cuts):
        raise NotCanonicalForm("cut outside Turn(lambda)")
    # zeta_q for 1 <= q <= p: the element of eta living on (tau_{q-1}, tau_q]
    zetas = []
    u = 0
    for q in range(1, len(tau)):
        while eta.cuts[u + 1] < tau[q]:
            u += 1
        zetas.append(eta.elems[u].xi)
    parts = []
    for i, m in enumerate(lam.fun):
        m = int(m)
        if m <= 1:
            parts.append(())
            continue
        rho_i = []
        for k in range(1, m):
            pk = tau.index(Fraction(k, m))
            rho_i.append(zetas[pk - 1][i])
        parts.append(tuple(v for v in rho_i if v != 0))
    return PartitionTuple(parts)


def xi_map(rho, lam, cartan):
    """Canonical SiLS path ``eta_rho`` of the component labelled by ``rho``."""
    J = J_of(lam)
    tau = turn_set(lam)
    p = len(tau) - 1
    zeta = [None] * (p + 1)
    zeta[p] = cartan.zero()
    for q in range(p - 1, 0, -1):
        z = list(zeta[q + 1])
        for i in jc_a(lam, tau[q], J):
            m = int(lam.fun[i - 1])
            k = int(tau[q] * m)
            part = rho.parts[i - 1]
            hi = part[k - 1] if k - 1 < len(part) else 0
            lo = part[k] if k < len(part) else 0
            z[i - 1] += hi - lo
        zeta[q] = tuple(z)
    qs = [q for q in range(1, p) if zeta[q] != zeta[q + 1]]
    elems, cuts = [], [Fraction(0)]
    for q in qs:
        phi, _ = adjust(cartan, zeta[q], J)
        elems.append(T(cartan, tuple(a + b for a, b in zip(zeta[q], phi)), J))
        cuts.append(tau[q])
    elems.append(AffineWeylElem.identity(cartan))
    cuts.append(Fraction(1))
    return SiLSPath(elems, cuts, lam)


def component_rep_search(eta, budget):
    """Breadth-first search of ``eta``'s component for its canonical member."""
    if is_canonical(eta):
        return eta
    seen = {eta}
    queue = deque([eta])
    I_af = eta.cartan.I_af
    while queue:
        b = queue.popleft()
        for i in I_af:
            for n in (b.e(i), b.f(i)):
                if n is None or n in seen:
                    continue
                if is_canonical(n):
                    return n
                if len(seen) >= budget:
                    raise BudgetExceeded(f"no canonical member among {len(seen)} visited nodes")
                seen.add(n)
                queue.append(n)
    raise BudgetExceeded("component exhausted without a canonical member")


def decomposition_check(cartan, lam, bound, depth):
    """Compare ``ball(eta_rho)`` with ``ball(rho ⊗ eta_e)`` for every ``rho`` with ``|rho| <= bound``.

    Returns a list of ``(rho, eta_rho, IsoResult)``.
    """
    from .paths import validate_sils

    eta_e = SiLSPath.identity(cartan, lam)
    report = []
    for rho in par_elements(lam, bound):
        eta = xi_map(rho, lam, cartan)
        validate_sils(eta.elems, eta.cuts, lam)
        if theta_map(eta) != rho:
            report.append((rho, eta, IsoResult(False, [], "theta_map(xi_map(rho)) != rho")))
            continue
        res = iso_check(generate_ball(eta, depth), generate_ball(ParNode(rho, eta_e), depth))
        report.append((rho, eta, res))
    return report
