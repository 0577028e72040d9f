"""What the two drone restrictions do to a solution.

A sortie's two flight legs (launch -> customer -> rendezvous) may be capped
by a battery budget, expressed as a percentage of the instance's largest
point-to-point distance; and some customers may simply be off limits for
the drone (heavy parcel, signature required).  Both restrictions only ever
remove options, so on a fixed visiting order the objective can only get
worse as they tighten.  This script sweeps the budget and then knocks out
half the customers.
"""

from tspd import (
    Instance,
    construct_tour,
    cost_model,
    exact_partition,
    generate,
    range_limit,
)

base = generate("uniform", 40, seed=9, alpha=2.0)
cost = cost_model(base)
tour = construct_tour(base, "two_opt_improved", seed=0, cost=cost)

print("flying-range sweep on one fixed 40-stop order:")
print(f"{'budget':>10} {'limit':>9} {'objective':>10} {'drone sorties':>14}")
for pct in (10.0, 20.0, 30.0, 50.0, 100.0, None):
    inst = Instance(nodes=base.nodes, alpha=base.alpha, flying_range_pct=pct)
    res = exact_partition(inst, tour.sequence, cost=cost)
    sorties = sum(1 for r in res.rings if r.drone is not None)
    label = "unlimited" if pct is None else f"{pct:.0f}%"
    limit = range_limit(inst, cost)
    shown = "inf" if limit == float("inf") else f"{limit:.1f}"
    print(f"{label:>10} {shown:>9} {res.value:>10.3f} {sorties:>14}")

# eligibility: the drone may only serve even-numbered customers
eligible = frozenset(c for c in base.customer_ids if c % 2 == 0)
restricted = Instance(nodes=base.nodes, alpha=base.alpha, eligible=eligible)
res = exact_partition(restricted, tour.sequence, cost=cost)
served = {r.drone for r in res.rings if r.drone is not None}
print(f"\nwith only even customers eligible: objective {res.value:.3f}, "
      f"drone served {sorted(served)}")
assert served <= eligible
