"""Semi-infinite LS paths, root operators and truncated crystal balls.

Run with ``python3 demos/02_paths_and_crystals.py``.
"""

from silpath import build_cartan
from silpath.crystal import generate_ball, iso_check, reference_seed, weyl_action
from silpath.notation import format_char
from silpath.paths import SiLSPath, n_lambda, sigma_N

c = build_cartan("A", 1)
lam = c.fundamental((2,))
eta = SiLSPath.identity(c, lam)
print("eta_e =", eta, " weight", eta.wt())

# f_1 reflects the first half of the path; a second f_1 finishes the job.
print("f_1 eta_e =", eta.f(1))
print("f_1 f_1 eta_e =", eta.f(1).f(1))
print("e_0 eta_e =", eta.e(0))
print("(eps_0, phi_0) =", (eta.epsilon(0), eta.phi(0)))

# Projection forgets the translation data and lands in LS paths.
p = eta.e(0).e(0).e(1)
print(p, "projects to", p.project())

# sigma_N splits a path into straight tensor factors.
N = n_lambda(c, lam)
print("N_lambda =", N, " sigma_N:", [str(x) for x in sigma_N(p, N)])

# The Weyl group acts on the crystal by strings of root operators.
print("r_1 r_0 eta_e =", weyl_action([1, 0], eta))

# A ball of radius 4 and its weight multiplicities.
ball = generate_ball(eta, 4)
print(len(ball), "nodes;", format_char(ball.weight_counts()))

# Compare with the tensor product of two copies of LS(varpi_1).
ref = generate_ball(reference_seed(c, lam), 4)
print("iso with LS(varpi_1)^{x2} component:", iso_check(ball, ref))
