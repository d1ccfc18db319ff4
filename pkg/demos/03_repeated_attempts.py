"""Retrying on failure by measuring the other pair.

After a failed GHZ measurement on (C, A), the pair (C, B) is measured next,
then (C, A) again, and so on. The tree below is enumerated exactly.
"""
import math

from spincat import ChannelParams, TargetState, build_tree, f_av_closed, p_success_closed

params = ChannelParams(0.6, 2, 0)
target = TargetState.from_angle(math.pi / 2)
tree = build_tree(params, target, 4)

print("depth pair  P_success  closed     F_av(accrued)  live failure mass")
for d in range(5):
    s = tree.stats(d)
    print(f"{d:<5} {tree.level(d)[0].pair:<5} {s.p_success:.6f}   {p_success_closed(params, math.pi / 2, d):.6f}   "
          f"{s.f_av_accrued:.6f}       {s.p_failure_live:.6f}")
print(f"closed forms: F(1) = {f_av_closed(params, math.pi / 2, 1):.6f}, F(2) = {f_av_closed(params, math.pi / 2, 2):.6f}")

# Branches can be looked up by their outcome path.
for label in ("1", "12", "120", "123"):
    n = tree.node(label)
    print(f"path {label:<4} pair {n.pair}  probability {n.probability:.6f}  fidelity {n.fidelity_raw:.6f}  success {n.success}")

# Odd cats lose exactly half of the remaining failure mass per step.
odd = build_tree(ChannelParams(0.6, 2, 1), target, 5)
print("\nodd cat failure mass:", [f"{1 - odd.stats(d).p_success:.6g}" for d in range(6)])
