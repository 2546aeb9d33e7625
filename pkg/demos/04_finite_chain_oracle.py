#!/usr/bin/env python3
"""Exact diagonalization of small rings as the trust anchor.

Dense per-sector diagonalization gives bit-exact ground states for up to 14
sites.  Nearest-neighbor correlators converge toward the infinite-chain
closed form, reduced two-spin density matrices reproduce every correlator,
and the pair concurrence dies beyond nearest neighbors exactly as the
closed-form analysis predicts.
"""

import math

from lechain import ed, quantum
from lechain.ed import Boundary, FiniteChain
from lechain.model import make_model

xxx = make_model("xxx", 1.0)
thermo = (1.0 - 4.0 * math.log(2.0)) / 3.0

print("ring size   energy         nn <sz sz>     gap to infinite chain")
for n in (4, 6, 8, 10, 12):
    gs = ed.ground_state(FiniteChain(model=xxx, n_sites=n, boundary=Boundary.PERIODIC))
    zz = ed.correlator(gs, "z", 0, 1).raw
    print(f"{n:>6}      {gs.energy:12.6f}   {zz:+.8f}     {abs(zz - thermo):.6f}")
print(f"infinite-chain value: {thermo:+.8f}")

print()
gs = ed.ground_state(FiniteChain(model=xxx, n_sites=12, boundary=Boundary.PERIODIC))
print("pair concurrence on the 12-site ring (spin-flip spectrum of the reduced matrix):")
for d in range(1, 7):
    rho = ed.reduced_density(gs, 0, d)
    print(f"  |i-j| = {d}: {quantum.wootters_concurrence(rho):.8f}")
print("only nearest neighbors are entangled before any measurement;")
print(f"finite rings overshoot the infinite-chain value 2 ln 2 - 1 = {2 * math.log(2) - 1:.6f}")

print()
print("anisotropic ring (eta = 0.5): transverse correlations dominate")
gz = ed.ground_state(FiniteChain(model=make_model("xxz", 0.5), n_sites=12, boundary=Boundary.PERIODIC))
for d in (1, 2, 3, 4, 5):
    x = ed.correlator(gz, "x", 0, d).raw
    z = ed.correlator(gz, "z", 0, d).raw
    print(f"  |i-j| = {d}: <sx sx> = {x:+.6f}   <sz sz> = {z:+.6f}")
