# Leading weak-coupling T1 amplitudes O(0 -> n) = A u^m.
from ladderstrength import TRI, strength_series, table3

print(f"{'n':>2} {'m':>4} {'A':>10}  {'expression':<28} ln(O^2) at u=1e-4  printed")
for row in table3():
    m = "-" if row.m is None else row.m
    printed = "" if row.printed_ln_strength is None else f"{row.printed_ln_strength:.2f}"
    print(f"{row.n:>2} {m:>4} {str(row.A):>10}  {row.expression:<28} {row.ln_strength:>10.2f}  {printed}")

# Truncating every component to its leading term is not the same as expanding
# the full series: at n=2 the complete expansion gives +1/3, not -2/3.
for mode in ("table4", "full_rs"):
    lead = strength_series(TRI, "T1", 2, mode)
    print(mode, "m =", lead.power_m, "A =", lead.coeff_A)

# T2 has no first-order cancellation
for n in range(1, 7):
    lead = strength_series(TRI, "T2", n, "full_rs")
    print("T2", n, lead.power_m, round(lead.coeff_A, 6))
