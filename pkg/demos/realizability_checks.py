"""Which triples can be a spectrum?  Closed-form criteria in action.

A triple (x, y, z) of nonnegative numbers is "realizable" for a topology
when some nonnegative weighting produces exactly {0, x, y, z} as its
Laplacian spectrum.  Each four-vertex topology has a closed-form
criterion; rejections come with a certificate naming the violated
inequality.

Run:  python3 demos/realizability_checks.py
"""

from lapreal import (
    check_complete,
    check_cycle,
    check_kite,
    check_path,
    check_star,
)

TRIPLES = [
    (1.0, 1.0, 4.0),   # star boundary: one discriminant factor vanishes
    (1.0, 1.0, 1.0),   # equal triple: only K4 can do this
    (4.0, 2.0, 2.0),   # cycle boundary: max equals half the sum
    (3.0, 3.0, 2.0),   # no entry reaches half the sum
    (4.0, 3.0, 1.0),   # kite accepts: sqrt(3)*(4-1) >= 4+1
    (3.0, 0.0, 3.0),   # two decoupled components, realizable on the path
]

CHECKS = [
    ("star", check_star),
    ("cycle", check_cycle),
    ("path", check_path),
    ("kite", check_kite),
    ("k4", lambda t: check_complete(t, 4)),
]

header = f"{'triple':18s}" + "".join(f"{name:>7s}" for name, _ in CHECKS)
print(header)
print("-" * len(header))
for triple in TRIPLES:
    row = f"{str(triple):18s}"
    for _, check in CHECKS:
        verdict = check(triple)
        row += f"{'yes' if verdict.realizable else 'no':>7s}"
    print(row)

print("\ncertificates for the rejected equal triple (1,1,1):")
for name, check in CHECKS[:-1]:
    verdict = check((1.0, 1.0, 1.0))
    if not verdict.realizable:
        print(f"  {name:6s}: {verdict.certificate.detail}")

print("\nnote the inclusion chain: path implies cycle and kite; star implies")
print("kite; K4 accepts everything (see demos/region_plots.py for the areas).")
