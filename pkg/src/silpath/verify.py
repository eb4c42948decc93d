"""Verification suites. Each suite returns a list of :class:`Check` results."""

import itertools
import random
from fractions import Fraction

from .cartan import AffineRoot, build_cartan, rho
from .crystal import (
    TensorElem,
    decomposition_check,
    extremal_verify,
    generate_ball,
    iso_check,
    ls_seed,
    projection_report,
    reference_seed,
    weyl_action,
)
from .errors import SilpathError
from .graphs import (
    J_of,
    brute_force_edge,
    candidate_betas,
    has_path,
    semiinfinite_leq,
    sib_edge_alt_check,
    sib_out_edges,
    translation_path_criterion,
)
from .parabolic import T, is_J_adjusted, proj_J
from .paths import SiLSPath, n_lambda, sigma_N, validate_sils
from .weyl import AffineWeylElem, FiniteWeylElem, bruhat_leq, reflection


class Check:
    def __init__(self, name, passed, detail="", count=0):
        self.name = name
        self.passed = passed
        self.detail = detail
        self.count = count

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        extra = f" [{self.count} cases]" if self.count else ""
        detail = f": {self.detail}" if self.detail else ""
        return f"{status} {self.name}{extra}{detail}"

    def __repr__(self):
        return f"Check({self.line()!r})"


ISO_CASES = (("A", 2, (1, 1), 6), ("A", 1, (1,), 8), ("A", 1, (2,), 6))


def _label(t, n, lam):
    return f"{t}{n} lambda=({','.join(str(v) for v in lam)})"


def _ball_cache():
    cache = {}

    def get(t, n, lam, depth):
        key = (t, n, tuple(lam), depth)
        if key not in cache:
            c = build_cartan(t, n)
            cache[key] = generate_ball(SiLSPath.identity(c, c.fundamental(lam)), depth)
        return cache[key]

    return get


sils_ball = _ball_cache()


def suite_iso(cases=ISO_CASES):
    out = []
    for t, n, lam, depth in cases:
        c = build_cartan(t, n)
        A = sils_ball(t, n, lam, depth)
        B = generate_ball(reference_seed(c, c.fundamental(lam)), depth)
        res = iso_check(A, B)
        ok = res.ok and res.counts_equal
        out.append(Check(
            f"iso {_label(t, n, lam)} depth {depth} vs tensor of LS(varpi_i)",
            ok, repr(res) + ("" if res.counts_equal in (None, True) else "; weight counts differ"),
            len(A),
        ))
    return out


def suite_noniso(t="A", n=2, lam=(1, 1), depth=6):
    c = build_cartan(t, n)
    A = sils_ball(t, n, lam, depth)
    L = generate_ball(ls_seed(c, c.fundamental(lam)), depth)
    surjective, collisions = projection_report(A, L)
    res = iso_check(A, L)
    detail = f"surjective={surjective}, collisions={len(collisions)}, iso={res!r}"
    if collisions:
        a, b = collisions[0]
        detail += f"; e.g. {a} and {b} both project to {a.project()}"
    return [Check(
        f"non-iso {_label(t, n, lam)} depth {depth} vs LS(lambda)",
        surjective and bool(collisions) and not res.ok, detail, len(A),
    )]


def _inverse_ok(ball):
    I_af = ball.cartan.I_af
    for b in ball.nodes:
        for i in I_af:
            f = b.f(i)
            if f is not None and f.e(i) != b:
                return False, f"e_{i} f_{i} {b} != itself"
            e = b.e(i)
            if e is not None and e.f(i) != b:
                return False, f"f_{i} e_{i} {b} != itself"
    return True, ""


def suite_stability(cases=ISO_CASES + (("A", 1, (2,), 8),)):
    out = []
    for t, n, lam, depth in cases:
        ball = sils_ball(t, n, lam, depth)
        bad = None
        for b in ball.nodes:
            try:
                validate_sils(b.elems, b.cuts, b.lam)
            except SilpathError as ex:
                bad = f"{b}: {ex}"
                break
        inv, why = _inverse_ok(ball)
        out.append(Check(
            f"stability {_label(t, n, lam)} depth {depth}",
            bad is None and inv, bad or why, len(ball),
        ))
    return out


def suite_components(t="A", n=1, lam=(2,), bound=3, depth=6):
    c = build_cartan(t, n)
    out = []
    for rho_, eta, res in decomposition_check(c, c.fundamental(lam), bound, depth):
        out.append(Check(
            f"component rho={rho_} of {_label(t, n, lam)} depth {depth}",
            res.ok, f"eta_rho={eta}; {res!r}", res.matched,
        ))
    return out


TRANSLATION_CASES = (
    ("A", 1, (1,)), ("A", 1, (2,)), ("A", 1, (3,)),
    ("A", 2, (1, 0)), ("A", 2, (1, 1)), ("A", 2, (2, 0)),
)
TRANSLATION_AS = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1))


def adjusted_box(cartan, J, radius):
    return [
        xi for xi in itertools.product(range(-radius, radius + 1), repeat=cartan.rank)
        if is_J_adjusted(cartan, xi, J)
    ]


def suite_translation(cases=TRANSLATION_CASES, radius=2, a_values=TRANSLATION_AS, visited=None):
    out = []
    for t, n, lam in cases:
        c = build_cartan(t, n)
        lw = c.fundamental(lam)
        J = J_of(lw)
        box = adjusted_box(c, J, radius)
        bad = []
        count = 0
        for zeta, xi in itertools.product(box, repeat=2):
            x, y = T(c, zeta, J), T(c, xi, J)
            for a in a_values:
                crit = translation_path_criterion(zeta, xi, J, lw, a)
                bfs = x != y and has_path(x, y, J, lw, a, visited=visited)
                count += 1
                if crit != bfs:
                    bad.append(f"zeta={zeta} xi={xi} a={a}: criterion {crit}, search {bfs}")
        out.append(Check(
            f"translation criterion {_label(t, n, lam)}", not bad,
            bad[0] if bad else "", count,
        ))
    return out


def collect_vertices():
    """Elements of ``(W^J)_af`` appearing in the iso/stability/translation suites, keyed by J."""
    verts = {}
    for t, n, lam, depth in ISO_CASES + (("A", 1, (2,), 8),):
        c = build_cartan(t, n)
        J = J_of(c.fundamental(lam))
        s = verts.setdefault((t, n, J), set())
        for b in sils_ball(t, n, lam, depth).nodes:
            s.update(b.elems)
    for case in TRANSLATION_CASES:
        t, n, lam = case
        c = build_cartan(t, n)
        J = J_of(c.fundamental(lam))
        s = verts.setdefault((t, n, J), set())
        for xi in adjusted_box(c, J, 2):
            s.add(T(c, xi, J))
        suite_translation(cases=(case,), visited=s)
    return verts


def suite_edges(verts=None):
    if verts is None:
        verts = collect_vertices()
    out = []
    for (t, n, J), xs in sorted(verts.items(), key=lambda kv: (kv[0][0], kv[0][1], sorted(kv[0][2]))):
        c = build_cartan(t, n)
        betas = candidate_betas(c)
        bad = []
        count = 0
        for x in sorted(xs, key=lambda x: x.sort_key()):
            out_set = {e.beta for e in sib_out_edges(x, J)}
            for beta in betas:
                a = beta in out_set
                b = sib_edge_alt_check(x, beta, J)
                d = brute_force_edge(x, beta, J)
                count += 1
                if not (a == b == d):
                    bad.append(f"x={x} beta={beta}: lift {a}, alt {b}, brute {d}")
        out.append(Check(f"edge oracles {t}{n} J={sorted(J)}", not bad, bad[0] if bad else "", count))
    return out


def suite_sigma(t="A", n=1, lam=(2,), depth=6):
    c = build_cartan(t, n)
    lw = c.fundamental(lam)
    ball = sils_ball(t, n, lam, depth)
    base = n_lambda(c, lw)
    out = []
    for N in (base, 2 * base):
        bad = []
        for eta in ball.nodes:
            s = TensorElem(sigma_N(eta, N))
            if s.weight() != eta.weight() * N:
                bad.append(f"wt scaling fails at {eta}")
            for i in c.I_af:
                if s.epsilon(i) != N * eta.epsilon(i) or s.phi(i) != N * eta.phi(i):
                    bad.append(f"eps/phi scaling fails at {eta}, i={i}")
                for op in ("f", "e"):
                    img = getattr(eta, op)(i)
                    lhs = None if img is None else TensorElem(sigma_N(img, N))
                    rhs = s
                    for _ in range(N):
                        if rhs is None:
                            break
                        rhs = getattr(rhs, op)(i)
                    if lhs != rhs:
                        bad.append(f"sigma_{N}({op}_{i} {eta}) != {op}_{i}^{N} sigma_{N}")
        out.append(Check(f"sigma_N laws {_label(t, n, lam)} N={N}", not bad, bad[0] if bad else "", len(ball)))
    return out


def strictly_dominant_coweight(cartan):
    """Sum of the positive coroots; pairs positively with every simple root."""
    xi = [0] * cartan.rank
    for k in range(cartan.num_positive):
        for j, v in enumerate(cartan.coroots[k]):
            xi[j] += v
    return tuple(xi)


def antidominant_offset(x, xi):
    """Least ``n >= 0`` with ``<zeta - n xi, alpha_i> <= -1`` for all ``i``, ``zeta`` the translation part of ``x``."""
    c = x.cartan
    n = 0
    while any(
        c.pair_coweight_root(tuple(a - n * b for a, b in zip(x.xi, xi)), c.simple[i]) > -1
        for i in range(c.rank)
    ):
        n += 1
    return n


def stabilized_bruhat(x, y, xi, n_max=6, window=4):
    """Value of ``y t_{-n xi} <= x t_{-n xi}`` once it is constant on a window of ``n``.

    The scan starts at ``n0``, the first ``n`` putting both translation
    parts strictly in the antidominant chamber; ``N - n0`` ranges over
    ``0..n_max`` and the value must be constant on ``N..N+window-1``.
    Returns ``(value, N - n0, n0)`` or ``(None, None, n0)``.
    """
    c = x.cartan
    n0 = max(antidominant_offset(x, xi), antidominant_offset(y, xi))
    vals = []
    for n in range(n0, n0 + n_max + window):
        t = AffineWeylElem.translation(c, tuple(-n * v for v in xi))
        vals.append(bruhat_leq(y * t, x * t))
    for N in range(n_max + 1):
        if len(set(vals[N:N + window])) == 1:
            return vals[N], N, n0
    return None, None, n0


def suite_appendix(types=(("A", 1), ("A", 2)), max_diff=3):
    out = []
    verts = collect_vertices()
    for t, n in types:
        c = build_cartan(t, n)
        xs = sorted(verts.get((t, n, frozenset()), set()), key=lambda x: x.sort_key())
        xi = strictly_dominant_coweight(c)
        bad = []
        count = 0
        maxN = 0
        for x, y in itertools.product(xs, repeat=2):
            d = y.sil() - x.sil()
            if not 0 <= d <= max_diff:
                continue
            gen, N, _ = stabilized_bruhat(x, y, xi)
            count += 1
            if gen is None:
                bad.append(f"no stabilization for x={x}, y={y}")
                continue
            maxN = max(maxN, N)
            si = semiinfinite_leq(x, y, frozenset())
            if si != gen:
                bad.append(f"x={x} y={y}: semi-infinite {si}, stabilized Bruhat {gen}")
        out.append(Check(
            f"appendix order equivalence {t}{n} xi={xi}",
            not bad,
            (bad[0] + "; " if bad else "") + f"window n=N..N+3 with N counted from the antidominant offset, largest N used {maxN}",
            count,
        ))
    return out


def suite_extremal(cases=ISO_CASES, L=4):
    out = []
    for t, n, lam, _ in cases:
        c = build_cartan(t, n)
        lw = c.fundamental(lam)
        J = J_of(lw)
        eta_e = SiLSPath.identity(c, lw)
        ok = extremal_verify(eta_e, L)
        bad = []
        count = 0
        for p in range(L + 1):
            for word in itertools.product(c.I_af, repeat=p):
                count += 1
                lhs = weyl_action(word, eta_e)
                rhs = SiLSPath.straight(proj_J(AffineWeylElem.from_word(c, word), J), lw)
                if lhs != rhs:
                    bad.append(f"word {list(word)}: {lhs} != {rhs}")
        out.append(Check(
            f"extremality {_label(t, n, lam)} L={L}", ok and not bad,
            ("" if ok else "extremal_verify failed; ") + (bad[0] if bad else ""), count,
        ))
    return out


LEMMA_TYPES = (("A", 1), ("A", 2), ("A", 3), ("B", 3), ("C", 2), ("G", 2))


def suite_lemmas(samples=500, seed=0):
    out = []
    bad = []
    count = 0
    for t, n in LEMMA_TYPES:
        c = build_cartan(t, n)
        rho_ = rho(c)
        for k in range(c.num_positive):
            count += 1
            lr = FiniteWeylElem.reflection(c, k).length()
            if lr > 2 * c.pair_coroot_weight(k, rho_) - 1:
                bad.append(f"{t}{n} alpha={c.roots[k]}: l(r_alpha)={lr}")
    out.append(Check("reflection length bound", not bad, bad[0] if bad else "", count))

    rng = random.Random(seed)
    bad = []
    for s in range(samples):
        t, n = LEMMA_TYPES[s % len(LEMMA_TYPES)]
        c = build_cartan(t, n)
        x = random_element(c, rng)
        k = rng.randrange(2 * c.num_positive)
        m = rng.randint(-2, 2)
        beta = AffineRoot(c.roots[k], m)
        if not c.is_positive_affine(beta):
            beta = AffineRoot(c.roots[c.neg(k)], -m)
        y = reflection(c, beta) * x
        vinv_alpha = x.w.inverse().perm[c.index_of(beta.finite)]
        if (y.sil() > x.sil()) != c.is_positive(vinv_alpha):
            bad.append(f"{t}{n} x={x} beta={beta}")
    out.append(Check("sil sign rule", not bad, bad[0] if bad else "", samples))

    bad = []
    count = 0
    for t, n, lam, depth in ISO_CASES + (("A", 1, (2,), 8),):
        c = build_cartan(t, n)
        N = n_lambda(c, c.fundamental(lam))
        for eta in sils_ball(t, n, lam, depth).nodes:
            count += 1
            if any((N * a).denominator != 1 for a in eta.cuts):
                bad.append(f"{eta}: N={N}")
    out.append(Check("cut integrality N_lambda a_u", not bad, bad[0] if bad else "", count))
    return out


def random_element(cartan, rng, word_len=6, radius=2):
    w = FiniteWeylElem.from_word(cartan, [rng.randint(1, cartan.rank) for _ in range(rng.randint(0, word_len))])
    xi = tuple(rng.randint(-radius, radius) for _ in range(cartan.rank))
    return AffineWeylElem(w, xi)


SUITES = {
    "iso": lambda: suite_iso() + suite_noniso(),
    "stability": suite_stability,
    "components": suite_components,
    "translation": suite_translation,
    "edges": suite_edges,
    "sigma": suite_sigma,
    "appendix": suite_appendix,
    "extremal": suite_extremal,
    "lemmas": suite_lemmas,
}


def run_suite(name):
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(SUITES[key]())
        return out
    return SUITES[name]()

