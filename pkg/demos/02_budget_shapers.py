"""
Budget shaping and hard masking
===============================

The three shapers as functions of the observed communication fraction, and
a token bucket clipping an over-eager agent.
"""

import numpy as np

from sparsecomm import enforcers as ef
from sparsecomm.enforcers import BudgetConfig, EpochCommStats, TokenBucket

cfg = BudgetConfig(b=0.3, mode="soft")

# %% Proportional term around a 30% budget (symmetric vs. verbatim sign)
for c in np.linspace(0.0, 1.0, 6):
    print(f"c={c:.1f}  max-comm {ef.comm_max_penalty(c):.2f}  "
          f"R_P {ef.soft_p_term(0.3, c):+.3f}  verbatim {ef.soft_p_term(0.3, c, 'verbatim'):+.3f}")

# %% A few epochs of the PID-style soft penalty while c drifts towards the budget
stats = EpochCommStats()
for c in (1.0, 0.8, 0.6, 0.45, 0.35, 0.31):
    rp = ef.soft_p_term(cfg.b, c)
    rd = ef.soft_d_term(rp, stats.prev_rp)
    ri = ef.soft_i_term(stats, rp, cfg.K)
    stats.prev_rp = rp
    print(f"c={c:.2f}  R_P={rp:.3f}  R_D={rd:+.3f}  R_I={ri:.3f}  penalty={ef.soft_penalty(rp, rd, ri, cfg):+.3f}")

# %% Hard enforcer: an agent that always tries to talk, 10% budget over 20 steps
bucket = TokenBucket(0.1, 20, n_agents=1, paced=False)
delivered = [bool(ef.hard_mask([True], bucket)[0][0]) for _ in range(20)]
print("delivered at steps:", [t for t, d in enumerate(delivered) if d])
c_star, c_hard = 1.0, sum(delivered) / 20
print(f"attempted {c_star:.2f}, delivered {c_hard:.2f}, hard penalty {ef.hard_penalty(c_star, c_hard):.2f}")
