"""One GHZ measurement on Charlie's target and Alice's half of the channel.

Fidelities are the raw overlaps |<T_i|I>|^2 of Bob's conditional state with
the target, without any Pauli correction; this is what makes the average
fidelity 1/2 for a maximally entangled channel.
"""
import math

from spincat import ChannelParams, TargetState, primary_attempt
from spincat.protocol import repetitions_required

params = ChannelParams(0.5, 1, 0)
target = TargetState.from_angle(math.pi / 3)
rep = primary_attempt(params, target)

print(f"p={params.p}, j={params.j}, omega=pi/3")
print("outcome  P_i        F_i        success  best correction")
for o in rep.outcomes:
    print(f"GHZ_{o.index}    {o.probability:.6f}   {o.fidelity_raw:.6f}   {str(o.success):<8} "
          f"{o.correction} -> {o.fidelity_corrected:.6f}")
print(f"F_av = {rep.f_av:.6f}, P_success = {rep.p_success:.6f}")

# For the even channel both quantities collapse to 1/2 + q cos(w) / (1 + q^2), q = p^j.
print("\nF_av and P_success as p grows (j=2)")
for p in (0.0, 0.25, 0.5, 0.75, 1.0):
    row = []
    for w in (0.0, math.pi / 2, math.pi):
        r = primary_attempt(ChannelParams(p, 2, 0), TargetState.from_angle(w))
        row.append(f"{r.f_av:.4f}/{r.p_success:.4f}")
    print(f"p={p:<5} w=0: {row[0]}  w=pi/2: {row[1]}  w=pi: {row[2]}")

# The odd channel is insensitive to p and omega.
odd = primary_attempt(ChannelParams(0.7, 2, 1), TargetState.from_angle(1.0))
print(f"\nodd cat: F_av={odd.f_av:.12f}  P_success={odd.p_success:.12f}")

for p, w in ((0.0, 1.0), (1.0, 0.0), (1.0, math.pi / 2)):
    print(f"repetitions needed at p={p}, omega={w:.3f}: {repetitions_required(p, 2, w):g}")
