#!/usr/bin/env python3
"""A desk-scale search campaign: plan, shard, checkpoint, report.

Builds a joint-bound plan around balanced exponents plus one explicit
(2,3,9) box, runs it over several shard counts, and shows that the report
hash never moves. The planted identity 7^3 + 13^2 = 2^9 is the only find.
"""

import tempfile

from gfekit.campaign import (
    CampaignPlan,
    build_p3_plan,
    explicit_box_task,
    run_campaign,
)

plan = build_p3_plan(5, 6, 7, box_limit=5)
plan.tasks.append(explicit_box_task("box-2-3-9", range(1, 25), 2,
                                    range(1, 25), 3, {9}))
plan = CampaignPlan("desk-demo", plan.tasks, {"box_limit": 5})
print(f"plan {plan.name}: {len(plan.tasks)} tasks, hash {plan.plan_hash()[:16]}")

for shards in (1, 4):
    report = run_campaign(plan, shards=shards)
    print(f"  shards={shards}: {report.verdict}, hash {report.report_hash()[:16]}")
    for rec in report.records():
        print(f"    found: {rec.identity()}")

with tempfile.NamedTemporaryFile(suffix=".ckpt", delete=False) as fh:
    ckpt = fh.name
report = run_campaign(plan, checkpoint_path=ckpt)
resumed = run_campaign(plan, checkpoint_path=ckpt)  # all tasks already done
print(f"  resumed from checkpoint: hash {resumed.report_hash()[:16]} "
      f"(same: {resumed.report_hash() == report.report_hash()})")
