"""
Blind traffic junction and predator-prey
========================================

Random play in both environments: how often cars collide when nobody
looks, and how quickly a random pack stumbles onto the prey.
"""

import numpy as np

from sparsecomm.envs import BRAKE, GAS, env_config, is_success, make_env
from sparsecomm.tensor import make_rng

# %% The easy junction: two one-way roads, 14 route cells in total
env = make_env(env_config("tj-easy"))
print("route cells:", env.layout.n_route_cells, " observation size:", env.spec.obs_dim)

# %% All-gas and random drivers over a few hundred episodes
for name, pick in [("all gas", lambda rng, n: np.full(n, GAS)),
                   ("random", lambda rng, n: rng.integers(2, size=n))]:
    rng = make_rng(0)
    wins = 0
    for _ in range(500):
        res = env.reset(rng)
        while not res.done:
            res = env.step(pick(rng, env.spec.n_agents))
        wins += is_success(env.episode_record())
    print(f"{name:>8}: collision-free episodes {wins / 500:.3f}")

# %% A car never sees the others: its observation is own cell + route + last action
res = env.reset(make_rng(3))
k = int(np.flatnonzero(res.alive)[0])
print("one car's observation:", res.obs[k].astype(int))

# %% Predator-prey 10x10 with five predators and a stationary prey
pp = make_env(env_config("pp-10x10"))
rng = make_rng(1)
caught = 0
for _ in range(200):
    res = pp.reset(rng)
    while not res.done:
        res = pp.step(rng.integers(5, size=pp.spec.n_agents))
    caught += is_success(pp.episode_record())
print(f"random predators reach the prey in {caught / 200:.2f} of episodes")
