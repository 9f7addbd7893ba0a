"""Click probability against thermal photon number and detector efficiency.

Prints the two sweeps as small tables. The same rows are available from the
command line via ``photonbounds sweep``.
"""

# %%
import numpy as np

from photonbounds import report

# %% [markdown]
# Sweep the thermal photon number at fixed efficiency. At high efficiency the
# click rate drops monotonically as thermal noise is added.

# %%
for eta in (0.9, 0.4):
    print(f"eta = {eta}")
    print(f"{'nbar':>6s} {'p':>8s} {'S':>8s} {'M_d':>8s} {'M_dt':>8s}  class")
    for nbar in np.linspace(0, 2, 9):
        r = report(nbar, eta)
        print(f"{nbar:6.2f} {r.p:8.4f} {r.s_bound:8.4f} {r.m_delta:8.4f} "
              f"{r.m_delta_tilde:8.4f}  {r.violation_class}")
    print()

# %% [markdown]
# Below eta = 1/2 the slope at nbar = 0 turns positive: a little thermal
# light raises the click rate of a weak detector.

# %%
for eta in (0.3, 0.5, 0.7):
    eps = 1e-6
    slope = (report(eps, eta).p - report(0.0, eta).p) / eps
    print(f"eta = {eta}: dp/dnbar at 0 = {slope:+.4f}")

# %% [markdown]
# Sweep the efficiency at fixed thermal photon number.

# %%
nbar = 0.2
print(f"\nnbar = {nbar}")
for eta in np.linspace(0.1, 1.0, 10):
    r = report(nbar, eta)
    print(f"eta={eta:4.2f}  p={r.p:.4f}  class={r.violation_class}")
