"""Harvest (window, exact cost) pairs while the solver works.

Every fresh window evaluation inside the improvement loop is a labeled
example: the window's normalized cost matrices in, the exact re-optimized
cost out.  A hook on the solver logs them as they happen, which is exactly
how training corpora for the guided search are produced (the `tspd dataset`
command wraps this loop).  This script runs two instances and prints what
one sample looks like on the wire.
"""

import json

from tspd import IcpConfig, build_graph_item, cost_model, f_prime, generate, solve_icp

samples = []
for seed in (101, 102):
    inst = generate("uniform", 60, seed=seed, alpha=2.0)
    cost = cost_model(inst)
    fpv = f_prime(inst)

    def log(path, result, cost=cost, fpv=fpv):
        item = build_graph_item(cost, path, fpv)
        row = item.to_wire()
        row["y"] = result.value / item.scale   # label in normalized units
        samples.append(row)

    solve_icp(inst, IcpConfig(), fresh_hook=log)

print(f"two 60-customer runs yielded {len(samples)} training samples\n")

row = samples[0]
print("one sample, abridged:")
print(f"  pos      = {row['pos']}")
print(f"  ct[0][:4]= {[round(v, 4) for v in row['ct'][0][:4]]}  (normalized, max edge == 1)")
print(f"  cd[0][:4]= {[round(v, 4) for v in row['cd'][0][:4]]}  (drone = truck / alpha)")
print(f"  scale    = {row['scale']:.4f}  (multiply predictions by this)")
print(f"  f_prime  = {row['f_prime']}  (0 means unlimited flying range)")
print(f"  y        = {row['y']:.6f}  (exact window cost / scale)")

sizes = sorted({len(r["pos"]) for r in samples})
print(f"\nwindow sizes in this batch: {sizes}")
print(f"full row as JSONL: {len(json.dumps(row))} bytes")
