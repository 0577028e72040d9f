"""Replace speculative window searches with a learned cost estimate.

Each improvement round evaluates every window exactly but splices only the
winner, so most of the search effort is thrown away.  The guided variant
scores uncached windows with a predictor, confirms only the most promising
one exactly, and splices that.  Guarantees survive any predictor, because
nothing enters the solution without exact confirmation; a bad predictor
costs time, never quality.  Here we run three predictors side by side:
the exact oracle (prediction == truth), a useless constant, and whatever
external command you pass (for example a trained model server).
"""

import sys
import time

from tspd import (
    ConstantPredictor,
    SubprocessPredictor,
    generate,
    solve_icp,
    solve_nicp,
)

inst = generate("uniform", 100, seed=21, alpha=2.0)


def timed(label, fn):
    t0 = time.perf_counter()
    result = fn()
    dt = time.perf_counter() - t0
    calls = result.trace.ep_all_calls
    print(f"{label:<28} cost {result.total_cost:9.3f}   "
          f"exact searches {calls:>4}   {dt:6.2f}s")
    return result


plain = timed("exact every window", lambda: solve_icp(inst))
oracle = timed("guided by exact oracle", lambda: solve_nicp(inst))
blind = timed("guided by constant zero", lambda: solve_nicp(inst, ConstantPredictor(0.0)))

assert abs(oracle.total_cost - plain.total_cost) < 1e-9
assert blind.total_cost <= blind.initial_value + 1e-9

if len(sys.argv) > 1:
    cmd = " ".join(sys.argv[1:])
    with SubprocessPredictor(cmd) as pred:
        timed(f"guided by `{cmd}`", lambda: solve_nicp(inst, pred))
else:
    print("\npass a predictor command to add it to the comparison, e.g.")
    print("  python3 demos/05_prediction_guided_search.py chainlet-predictor serve model.pt")
