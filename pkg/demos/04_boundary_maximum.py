"""Stationary point versus true maximum of the lossy Q function.

The radial Q function of the lossy state has a single stationary point. When
eta (nbar + 2) < 1 that point sits at u < 0, outside phase space, and the
true maximum over u >= 0 is at the origin.
"""

# %%
import math

from photonbounds import MaxMode, bound_m_delta, bound_m_delta_tilde, maximize_radial
from photonbounds.models import LossyPatsQ

nbar = 0.2
print(f"{'eta':>5s} {'u* literal':>11s} {'pi Q literal':>13s} {'pi Q true':>10s} {'numeric':>10s} {'M_tilde':>9s}")
for eta in (0.9, 0.6, 0.45, 0.4, 0.3, 0.2, 0.1):
    prof = LossyPatsQ(nbar, eta)
    u_lit, _ = prof.analytic_max(MaxMode.PAPER)
    num = maximize_radial(prof)
    print(f"{eta:5.2f} {u_lit:11.4f} {bound_m_delta(nbar, eta, MaxMode.PAPER):13.6f} "
          f"{bound_m_delta(nbar, eta, MaxMode.TRUE):10.6f} {math.pi * num.q_max:10.6f} "
          f"{bound_m_delta_tilde(nbar, eta):9.4f}")

# %% [markdown]
# At very low efficiency the literal value grows without bound and ends up
# above M_delta_tilde, while the true maximum always stays below it.

# %%
for eta in (0.1, 0.05):
    lit = bound_m_delta(0.0, eta, MaxMode.PAPER)
    true = bound_m_delta(0.0, eta, MaxMode.TRUE)
    print(f"nbar=0, eta={eta}: literal {lit:.4g}, true {true:.4g}, M_tilde {bound_m_delta_tilde(0.0, eta):.4g}")
