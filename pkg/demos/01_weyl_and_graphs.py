"""Affine Weyl group elements, Peterson representatives and semi-infinite Bruhat edges.

Run with ``python3 demos/01_weyl_and_graphs.py``.
"""

from fractions import Fraction

from silpath import build_cartan
from silpath.graphs import has_path, qb_out_edges, sib_out_edges
from silpath.parabolic import adjust, is_peterson_rep, proj_J
from silpath.weyl import AffineWeylElem, FiniteWeylElem

c = build_cartan("A", 2)
print("Cartan matrix of A2 with its affine row:", c.cartan_matrix)

# Elements are stored as w t_xi; the affine reflection r_0 carries a translation.
r0 = AffineWeylElem.simple(c, 0)
print("r_0 =", r0, " length", r0.length(), " sil", r0.sil())

t = AffineWeylElem.translation(c, (1, 0))
print("t_{alpha_1^v}: length", t.length(), "sil", t.sil())

# Peterson representatives for J = {2}: t_{alpha_1^v} is not one, its projection is.
J = {2}
print("is t a Peterson representative?", is_peterson_rep(t, J))
print("projection:", proj_J(t, J))
print("adjust(alpha_1^v):", adjust(c, (1, 0), J))

# The quantum Bruhat graph from the longest element has only quantum edges.
w0 = FiniteWeylElem.from_word(c, [1, 2, 1])
for e in qb_out_edges(w0, []):
    print("QB edge", e.source, "->", e.target, "gamma", e.gamma, e.kind)

# Semi-infinite Bruhat edges are lifts of those edges.
x = AffineWeylElem.identity(c)
for e in sib_out_edges(x, []):
    print("SiB edge", e.source, "--", e.beta, "->", e.target)

# Reachability in the filtered graph SiB(lambda; a).
a1 = build_cartan("A", 1)
lam = a1.fundamental((2,))
path = has_path(AffineWeylElem.identity(a1), AffineWeylElem.translation(a1, (1,)), set(), lam, Fraction(1, 2), return_path=True)
print("path e -> t_{alpha^v} at a=1/2:", [str(e.beta) for e in path])
