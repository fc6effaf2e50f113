"""Complete graphs realize everything: suspension law and K_n inversion.

Adding a new vertex joined to every old vertex with uniform weight c
("suspension") shifts every non-trivial eigenvalue by c and appends a
new eigenvalue c*(n+1).  Iterating this realizes any nonnegative tuple
on a complete graph.

Run:  python3 demos/complete_graphs.py
"""

import numpy as np

from lapreal import (
    build_laplacian,
    invert_complete,
    spectrum_numeric,
    suspend_spectrum,
)

np.set_printoptions(precision=6, suppress=True)

print("== suspension law, starting from a unit K2 ==")
spec = np.array([0.0, 2.0])
for step in range(3):
    nxt = suspend_spectrum(spec, 1.0)
    print(f"{spec} --(c=1)--> {nxt}")
    spec = nxt

print("\nc = 0 attaches an isolated vertex, appending one zero:")
print(suspend_spectrum([0.0, 1.0, 2.5, 4.0], 0.0))

print("\n== invert_complete: any tuple on K_{n+1} ==")
target = (6.0, 3.0, 2.0)
sol = invert_complete(target)
print(f"target {target} on K4")
print(f"weights (lexicographic edge order): {np.round(sol.weights, 6)}")
spec = spectrum_numeric(build_laplacian(sol.topology, sol.weights))
print(f"forward spectrum: {spec}   residual {sol.residual:.2e}")

print("\nlarger orders (random targets):")
rng = np.random.default_rng(4)
for n in (4, 7, 10):
    target = np.round(rng.uniform(0.0, 5.0, n), 3)
    sol = invert_complete(target)
    print(f"  n={n:2d}: residual {sol.residual:.2e}, "
          f"min weight {min(sol.weights):.4f}")
