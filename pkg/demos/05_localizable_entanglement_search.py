#!/usr/bin/env python3
"""Direct localizable-entanglement search on small chains.

Local projective measurements on the assisting spins leave the marked pair in
a pure state per outcome; optimizing the measurement bases maximizes the
average pair concurrence.  On the GHZ state the X basis localizes a full Bell
pair.  On Heisenberg rings the optimum sits on the correlation lower bound,
sandwiched below the assistance upper bound, and always above the
pre-measurement concurrence of the pair.
"""

from lechain import ed, le_search as ls, quantum
from lechain.ed import Boundary, FiniteChain
from lechain.model import make_model

print("GHZ state, 4 qubits, pair (0, 1):")
res = ls.optimize_le(ls.ghz_state(4), (0, 1), restarts=4)
print(f"  optimized LE = {res.value:.9f} (converged: {res.converged})")
print(f"  optimal polar angles: {[round(t, 4) for t in res.plan.theta]} (pi/2 is the X basis)")

print()
print("Heisenberg ring, 8 sites, every separation:")
gs = ed.ground_state(FiniteChain(model=make_model("xxx", 1.0), n_sites=8, boundary=Boundary.PERIODIC))
print("pair    LE search   lower bound   upper bound   pre-measurement")
for j in (1, 2, 3, 4):
    pair = (0, j)
    res = ls.optimize_le(gs.vector, pair, restarts=6)
    qx = ed.correlator(gs, "x", *pair)
    qz = ed.correlator(gs, "z", *pair)
    lower = quantum.le_lower_bound(qx.connected, qx.connected, qz.connected)
    upper = quantum.le_upper_bound(qz.raw, 0.0, 0.0)
    pre = quantum.wootters_concurrence(ed.reduced_density(gs, *pair))
    print(f"(0,{j})   {res.value:.6f}    {lower:.6f}      {upper:.6f}      {pre:.6f}")

print()
print("the search lands on the correlation lower bound at every distance, and")
print("measurement raises the pair concurrence far above its pre-measurement value.")
