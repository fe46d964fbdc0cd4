"""
Checking the hand-written backward pass
=======================================

Finite differences against the analytic gradient of the whole REINFORCE
loss (recurrent core, message aggregation, gate and value heads) on a tiny
two-agent, three-step batch.
"""

import numpy as np

from sparsecomm import tensor as tc
from sparsecomm.curriculum import Regime
from sparsecomm.enforcers import BudgetConfig
from sparsecomm.envs import env_config, make_env
from sparsecomm.policy import CommPolicy, PolicyConfig
from sparsecomm.trainer import collect_episodes, replay_loss, returns_and_advantages

env_cfg = env_config("pp-5x5", n_predators=2, max_steps=3)
spec = make_env(env_cfg).spec

for message, gate, quantizer in [("continuous", "open", "gumbel_st"),
                                 ("continuous", "learned", "gumbel_st"),
                                 ("proto", "learned", "sample")]:
    cfg = PolicyConfig(obs_dim=spec.obs_dim, n_actions=spec.n_actions, hidden=8, d_p=4, n_protos=5,
                       message=message, quantizer=quantizer, dropout=0.0)
    policy = CommPolicy(cfg, rng=tc.make_rng(0))
    traj = collect_episodes(policy, env_cfg, 2, tc.make_rng(1), Regime(gate, "none", False), BudgetConfig())
    traj.env_reward = np.random.default_rng(0).normal(size=traj.env_reward.shape)
    ret, adv = returns_and_advantages(traj)

    def loss_and_grad():
        policy.zero_grad()
        return replay_loss(policy, traj, adv, ret)

    err = tc.finite_diff_check(loss_and_grad, policy.params, step=1e-4)
    n = sum(t.data.size for t in policy.params.values())
    print(f"{message:>10} message, {gate:>7} gate: {n} parameters, worst relative error {err:.1e}")
