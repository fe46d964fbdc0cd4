"""
How well can blind cars do without talking?
===========================================

Exact search over shared deterministic driving schedules, on instances
small enough to enumerate. The optimum bounds every no-communication
policy, learned or not.
"""

from sparsecomm import oracle as orc
from sparsecomm.envs import TrafficJunctionConfig
from sparsecomm.oracle import OracleConfig

# %% A 3x3 toy: merged and unmerged searches agree exactly
toy = OracleConfig(env=TrafficJunctionConfig.easy(dim=3, n_max=2, max_steps=6))
print("memoisation consistent:", orc.verify_memoization(toy))

# %% The easy geometry with two concurrent cars and a 12-step horizon
cfg = OracleConfig(env=TrafficJunctionConfig.easy(n_max=2, max_steps=12))
res = orc.solve(cfg)
gas = orc.expected_success(cfg, orc.all_gas(cfg))
print(f"best no-comm success {res.success:.4f} (all-gas {gas:.4f}); budget lower bound {res.b_lb:.4f}")
print(f"states expanded {res.states_expanded}, merged {res.cache_hits}, search nodes {res.nodes}")
for route, sched in enumerate(res.schedules):
    print(f"route {route}:", "".join("G" if a == 0 else "b" for a in sched))

# %% The full five-car instance is out of reach for exact search
try:
    orc.solve(OracleConfig(env=TrafficJunctionConfig.easy(), max_states=200_000))
except orc.InstanceTooLarge as exc:
    print("full instance:", exc)
