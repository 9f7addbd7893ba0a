"""Map of which bounds are violated over the (nbar, eta) plane.

Each cell shows three bits: S, M_delta, M_delta_tilde. A 1 means the click
probability exceeds that bound.
"""

# %%
import numpy as np

from photonbounds import MaxMode, report

nbars = np.linspace(0, 3, 13)
etas = np.linspace(0.1, 1.0, 10)

for mode in MaxMode:
    print(f"M_delta mode: {mode.value}")
    print("eta\\nbar " + " ".join(f"{n:4.2f}" for n in nbars))
    for eta in etas[::-1]:
        cells = [report(n, eta, mode).violation_class for n in nbars]
        print(f"{eta:8.2f} " + " ".join(f"{c:>4s}" for c in cells))
    print()

# %% [markdown]
# The two tables agree cell for cell. The modes differ only where
# eta (nbar + 2) < 1, and there p already sits below both versions of M_delta,
# so the middle bit is 0 either way.
