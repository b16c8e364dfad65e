import json

import pytest

from gfekit.campaign import (
    CampaignPlan,
    CampaignReport,
    CheckpointMismatch,
    build_p1_plan,
    build_p2_plan,
    build_p3_plan,
    explicit_box_task,
    run_campaign,
)


def desk_plan() -> CampaignPlan:
    plan = build_p3_plan(5, 6, 7, box_limit=8)
    plan.tasks.append(explicit_box_task("box-239", range(1, 25), 2,
                                        range(1, 25), 3, {9}))
    return plan


def test_p3_plan_shape():
    plan = build_p3_plan(5, 6, 7, box_limit=8)
    assert plan.meta["l"] == 11  # smallest admissible auxiliary prime
    assert plan.tasks
    assert all(t.kind == "pair" for t in plan.tasks)
    with pytest.raises(ValueError):
        build_p3_plan(4, 5, 6)  # 6 > 4 + 5 - 4
    with pytest.raises(ValueError):
        build_p2_plan(5, 6, 7)  # 7 < 5 + 6 - 3
    assert build_p2_plan(4, 5, 30, box_limit=4).tasks


def test_p1_plan_shape():
    plan = build_p1_plan(4, 5, box_limit=10)
    assert plan.meta["l"] == 11
    assert all(t.kind == "tail" for t in plan.tasks)
    assert all(t.params["m_lo"] == 70 and t.params["m_hi"] == 306
               for t in plan.tasks)
    with pytest.raises(ValueError):
        build_p1_plan(4, 70)


def test_campaign_finds_planted_identity_and_nothing_else():
    report = run_campaign(desk_plan())
    assert [r.identity() for r in report.records()] == ["13^2 + 7^3 = 2^9"]
    assert report.verdict.startswith("1-records-found")


def test_campaign_determinism_across_shards():
    plan = desk_plan()
    hashes = {run_campaign(plan, shards=n).report_hash() for n in (1, 4, 8)}
    assert len(hashes) == 1


def test_plan_roundtrip(tmp_path):
    plan = desk_plan()
    path = tmp_path / "plan.json"
    plan.save(str(path))
    loaded = CampaignPlan.load(str(path))
    assert loaded.plan_hash() == plan.plan_hash()


def test_report_roundtrip(tmp_path):
    report = run_campaign(desk_plan())
    path = tmp_path / "report.json"
    report.save(str(path))
    loaded = CampaignReport.load(str(path))
    assert loaded.report_hash() == report.report_hash()
    # corrupt a record: load must refuse
    data = json.loads(path.read_text())
    for outcome in data["outcomes"]:
        for rec in outcome["records"]:
            rec["x"] += 1
    path.write_text(json.dumps(data))
    with pytest.raises(Exception):
        CampaignReport.load(str(path))


def test_checkpoint_resume(tmp_path):
    plan = desk_plan()
    ckpt = tmp_path / "run.ckpt"
    full = run_campaign(plan)
    # run the first half only, by truncating the plan
    half = CampaignPlan(plan.name, plan.tasks[: len(plan.tasks) // 2], plan.meta)
    partial = run_campaign(half, checkpoint_path=str(ckpt))
    assert len(partial.outcomes) == len(half.tasks)
    # hack: the checkpoint from the half-plan has a different plan hash,
    # so resuming the full plan from it must refuse
    with pytest.raises(CheckpointMismatch):
        run_campaign(plan, checkpoint_path=str(ckpt))
    # a matching checkpoint resumes and completes to the same report
    ckpt2 = tmp_path / "run2.ckpt"
    first = run_campaign(plan, checkpoint_path=str(ckpt2))
    again = run_campaign(plan, checkpoint_path=str(ckpt2))
    assert first.report_hash() == again.report_hash() == full.report_hash()


def test_checkpoint_integrity(tmp_path):
    plan = desk_plan()
    ckpt = tmp_path / "run.ckpt"
    run_campaign(plan, checkpoint_path=str(ckpt))
    lines = ckpt.read_text().splitlines()
    # tamper with a completed-task line
    tampered = lines[:]
    assert '"box_size":' in tampered[1]
    tampered[1] = tampered[1].replace('"box_size":', '"box_size":9', 1)
    ckpt.write_text("\n".join(tampered) + "\n")
    with pytest.raises(CheckpointMismatch):
        run_campaign(plan, checkpoint_path=str(ckpt))
