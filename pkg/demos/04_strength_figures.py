# ln(O^2) against excitation energy for T1/T2 on the tri- and pentadiagonal
# ladders at v = 0.1 MeV.  Writes strength_figures.png next to this script.
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ladderstrength import PENTA, TRI, strength_profile

panels = [("T1", TRI), ("T1", PENTA), ("T2", TRI), ("T2", PENTA)]
fig, axes = plt.subplots(2, 2, figsize=(9, 6), sharex=True)
for ax, (kind, spec) in zip(axes.flat, panels):
    recs = strength_profile(spec, kind)
    ax.plot([r.e_star for r in recs], [r.ln_strength for r in recs], "o-")
    ax.set_title(f"{kind} {spec.name} v={spec.coupling_v}")
    ax.set_ylabel("ln(O^2)")
for ax in axes[1]:
    ax.set_xlabel("E* (MeV)")
fig.tight_layout()
out = Path(__file__).with_name("strength_figures.png")
fig.savefig(out, dpi=120)
print("wrote", out)

# the dip at the second excited state of the pentadiagonal ladder
for kind in ("T1", "T2"):
    s = {r.to_state: r.strength for r in strength_profile(PENTA, kind)}
    print(kind, "S(0->2)/S(0->1) =", s[2] / s[1])

# strong coupling: every transition fades
for v in (1e2, 1e3, 1e4):
    print(v, max(r.strength for r in strength_profile(TRI.with_coupling(v), "T1")))
