# With couplings to the next and next-to-next level, the leading amplitudes
# are sums over the shortest walks, each step weighted by 1/(E_ref - E_step).
from ladderstrength import PENTA, path_leading, rs_series

for target in range(1, 6):
    print(f"0 -> {target}:", path_leading(PENTA, 0, target))

# Back-propagation from the second excited state
print("2 -> 0:", path_leading(PENTA, 2, 0), "  2 -> 1:", path_leading(PENTA, 2, 1))

# At v/E = 1e-10 a float eigensolver cannot see components near 1e-54;
# the exact series can.
state = rs_series(PENTA, 0, 8)
for n, x in enumerate(state.evaluate(1e-10)):
    print(f"a{n:<2d} {x: .6e}")
