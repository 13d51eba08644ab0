"""Walk through the spectrum of a clique with one pendant chain.

The 9-vertex example (K6 plus a 3-vertex chain) has all three mode types:
a 4-fold clique eigenvalue at 6, one localized edge eigenvalue just above
the clique value, and oscillatory chain eigenvalues inside [0, 4].
"""

import numpy as np

from cliquechain import (
    build_single_chain,
    classify_spectrum,
    eig_sym,
    laplacian,
    weyl_one,
)

p, q = 6, 4
g = build_single_chain(p, q)
L = laplacian(g)

print(f"K{p} + chain of {q - 1} vertices: n = {g.n}, {len(g.edges)} edges")
print("Laplacian diagonal (degrees):", np.diag(L).astype(int))

spec = eig_sym(L)
print("\neigenvalues (dense Jacobi oracle):")
for grp in spec.groups:
    tag = f" x{grp.multiplicity}" if grp.multiplicity > 1 else ""
    print(f"  {grp.value: .6f}{tag}")

cls = classify_spectrum(g)
print("\nclassification:")
for c in cls.clique_counts:
    print(f"  clique value {c.value:g} with multiplicity {c.oracle_multiplicity}")
for e in cls.edge_values:
    print(f"  edge value {e.value:.6f} (root of the characteristic eq: {e.analytic:.6f})")
print(f"  chain values {np.round(cls.chain_values, 6)}")
print(f"  zero mode: {cls.zero_mode}")

wb = weyl_one(p, q)
print("\ninterval bounds (all hold):")
for e in wb.entries:
    idx = f"j={e.j_lo}" if e.j_lo == e.j_hi else f"j={e.j_lo}..{e.j_hi}"
    print(f"  {idx}: [{e.lower:g}, {e.upper:g}]  ({e.note})")
print("  min margin over the spectrum:", f"{min(wb.margins(spec.eigenvalues)):.4f}")
