"""Connected components of the SiLS crystal for lambda = 2 varpi_1 in A1.

Components are labelled by partitions; each labelled component is a
copy of the component of eta_e with the weight shifted by -|rho| delta.
Run with ``python3 demos/03_components.py``.
"""

from silpath import build_cartan
from silpath.crystal import component_rep_search, decomposition_check, par_elements, theta_map, xi_map

c = build_cartan("A", 1)
lam = c.fundamental((2,))

for rho in par_elements(lam, 3):
    eta = xi_map(rho, lam, c)
    print(f"rho={rho}  eta_rho={eta}  wt={eta.wt()}  theta back={theta_map(eta)}")

# Starting anywhere in a component, a breadth-first search finds its canonical member.
start = xi_map(par_elements(lam, 2)[-1], lam, c).f(1).f(1).f(0)
print("search from", start, "->", component_rep_search(start, 500))

for rho, eta, res in decomposition_check(c, lam, 3, 5):
    print(rho, res)
