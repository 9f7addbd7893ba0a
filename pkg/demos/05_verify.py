"""Run the self-consistency checks and print a summary.

Equivalent to ``photonbounds verify``.
"""

# %%
from photonbounds import oracle

rep = oracle.run_all(oracle.VerifyConfig(rng_seed=42))
for c in rep.checks:
    print(f"{c.name:22s} {'PASS' if c.passed else 'FAIL'}  max err {c.max_abs_error:.2e}  {c.detail}")
for note in rep.notes:
    print("note:", note)
print("overall:", "PASS" if rep.overall else "FAIL")
