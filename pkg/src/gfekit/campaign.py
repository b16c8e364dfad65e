"""Campaign plans: sharded, checkpointed execution of search boxes.

A plan is a list of independent tasks, each a self-contained generator spec
for a finite box (candidate expansions of fixed smooth parts, or explicit
value lists). Execution order never affects the report: outcomes are merged
by task id and hashed over a canonical JSON form, so the same plan yields
byte-identical reports for any shard count and across resumes.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .linlog import LinLog, log_of_int
from .ramification import A2_TABLES
from .ramification import a1_coefficient
from .search import SolutionRecord, check_pair, check_power_tail
from .structure import structure_profile

__all__ = [
    "CampaignPlan",
    "CampaignReport",
    "CheckpointMismatch",
    "build_p1_plan",
    "build_p2_plan",
    "build_p3_plan",
    "explicit_box_task",
    "run_campaign",
]

_PLAN_L_CHOICES = (11, 13, 17, 19)


class CheckpointMismatch(RuntimeError):
    """Checkpoint belongs to a different plan or fails its integrity hash."""


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _sha(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


@dataclass(frozen=True)
class Task:
    task_id: str
    kind: str          # "pair" | "tail"
    params: dict

    def as_dict(self) -> dict:
        return {"task_id": self.task_id, "kind": self.kind, "params": self.params}


@dataclass
class CampaignPlan:
    name: str
    tasks: list[Task]
    meta: dict = field(default_factory=dict)

    def plan_hash(self) -> str:
        return _sha(_canonical({
            "name": self.name,
            "meta": self.meta,
            "tasks": [t.as_dict() for t in self.tasks],
        }))

    def as_dict(self) -> dict:
        return {"name": self.name, "meta": self.meta,
                "tasks": [t.as_dict() for t in self.tasks]}

    @classmethod
    def from_dict(cls, d: dict) -> "CampaignPlan":
        return cls(
            name=d["name"],
            tasks=[Task(t["task_id"], t["kind"], t["params"]) for t in d["tasks"]],
            meta=d.get("meta", {}),
        )

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.as_dict(), fh, indent=1, sort_keys=True)

    @classmethod
    def load(cls, path: str) -> "CampaignPlan":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


def _expand_spec(spec: dict) -> list[int]:
    """Candidate values for one coordinate, from a generator spec."""
    if "values" in spec:
        return sorted(set(int(v) for v in spec["values"]))
    l = spec["l"]
    out = set()
    for lp in spec.get("lparts", [1]):
        for el in range(spec.get("el_cap", 0) + 1):
            for e3 in range(spec.get("e3_cap", 0) + 1):
                for e2 in range(spec.get("e2_cap", 0) + 1):
                    out.add(spec["smooth"] * 2**e2 * 3**e3 * l**el * lp**l)
    return sorted(out)


def run_task(task: Task | dict) -> dict:
    if isinstance(task, dict):
        task = Task(task["task_id"], task["kind"], task["params"])
    p = task.params
    if task.kind == "pair":
        a = _expand_spec(p["a"])
        b = _expand_spec(p["b"])
        records = check_pair(a, p["r"], b, p["s"], p["t_set"])
        box = len(a) * len(b)
    elif task.kind == "tail":
        cands = _expand_spec(p["spec"])
        records = check_power_tail(
            cands, p["s"], p["r_set"], range(p["m_lo"], p["m_hi"] + 1),
            m_bounds=(p["m_lo"], p["m_hi"]),
        )
        box = len(cands) * (p["m_hi"] - p["m_lo"] + 1)
    else:
        raise ValueError(f"unknown task kind {task.kind!r}")
    return {
        "task_id": task.task_id,
        "box_size": box,
        "records": [r.as_dict() for r in sorted(records, key=lambda r: r.sort_key())],
    }


@dataclass
class CampaignReport:
    plan_name: str
    plan_hash: str
    outcomes: list[dict]
    truncated: bool

    def records(self) -> list[SolutionRecord]:
        out = []
        for o in self.outcomes:
            out.extend(SolutionRecord.from_dict(r) for r in o["records"])
        return sorted(set(out), key=lambda r: r.sort_key())

    @property
    def verdict(self) -> str:
        n = sum(len(o["records"]) for o in self.outcomes)
        base = "all-boxes-empty" if n == 0 else f"{n}-records-found"
        return base + ("-truncated" if self.truncated else "")

    def report_hash(self) -> str:
        return _sha(_canonical({
            "plan": self.plan_hash,
            "outcomes": self.outcomes,
        }))

    def as_dict(self) -> dict:
        return {
            "plan_name": self.plan_name,
            "plan_hash": self.plan_hash,
            "verdict": self.verdict,
            "truncated": self.truncated,
            "outcomes": self.outcomes,
            "report_hash": self.report_hash(),
        }

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.as_dict(), fh, indent=1, sort_keys=True)

    @classmethod
    def load(cls, path: str) -> "CampaignReport":
        with open(path) as fh:
            d = json.load(fh)
        report = cls(d["plan_name"], d["plan_hash"], d["outcomes"], d["truncated"])
        report.records()  # re-verify every record exactly
        if report.report_hash() != d["report_hash"]:
            raise CheckpointMismatch("report hash mismatch on load")
        return report


# ---------------------------------------------------------------------------
# Checkpointing.


def _read_checkpoint(path: str, plan_hash: str) -> dict[str, dict]:
    done: dict[str, dict] = {}
    if not os.path.exists(path):
        return done
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
    if not lines:
        return done
    head = json.loads(lines[0])
    if head.get("plan_hash") != plan_hash:
        raise CheckpointMismatch(
            f"checkpoint is for plan {head.get('plan_hash')!r}, not {plan_hash!r}"
        )
    body = []
    for ln in lines[1:]:
        d = json.loads(ln)
        if "integrity" in d:
            expect = _sha("\n".join([lines[0]] + body))
            if d["integrity"] != expect:
                raise CheckpointMismatch("checkpoint integrity hash mismatch")
            continue
        body.append(ln)
        done[d["task_id"]] = d["outcome"]
    return done


def _shards_of(tasks: list[Task], shards: int) -> list[list[Task]]:
    buckets: list[list[Task]] = [[] for _ in range(shards)]
    for i, t in enumerate(tasks):
        buckets[i % shards].append(t)
    return buckets


def _run_shard(task_dicts: list[dict]) -> list[dict]:
    return [run_task(t) for t in task_dicts]


def run_campaign(
    plan: CampaignPlan,
    *,
    shards: int = 1,
    checkpoint_path: str | None = None,
) -> CampaignReport:
    """Execute a plan, optionally resuming from a checkpoint.

    Shard count affects scheduling only; the merged report (and its hash)
    is identical for any value. A single writer owns the checkpoint stream.
    """
    phash = plan.plan_hash()
    done = _read_checkpoint(checkpoint_path, phash) if checkpoint_path else {}
    pending = [t for t in plan.tasks if t.task_id not in done]

    ckpt = None
    if checkpoint_path:
        fresh = not os.path.exists(checkpoint_path) or not done
        ckpt = open(checkpoint_path, "a")
        if fresh and os.path.getsize(checkpoint_path) == 0:
            ckpt.write(_canonical({"plan_hash": phash}) + "\n")
            ckpt.flush()

    outcomes = dict(done)
    try:
        if shards <= 1 or len(pending) <= 1:
            for t in pending:
                outcome = run_task(t)
                outcomes[t.task_id] = outcome
                if ckpt:
                    ckpt.write(_canonical({"task_id": t.task_id, "outcome": outcome}) + "\n")
                    ckpt.flush()
        else:
            buckets = _shards_of(pending, shards)
            with ProcessPoolExecutor(max_workers=shards) as pool:
                for shard_result in pool.map(
                        _run_shard, [[t.as_dict() for t in b] for b in buckets if b]):
                    for outcome in shard_result:
                        outcomes[outcome["task_id"]] = outcome
                        if ckpt:
                            ckpt.write(_canonical(
                                {"task_id": outcome["task_id"], "outcome": outcome}
                            ) + "\n")
                            ckpt.flush()
    finally:
        if ckpt:
            ckpt.close()
    if checkpoint_path:
        with open(checkpoint_path) as fh:
            lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
        body = [ln for ln in lines if "integrity" not in json.loads(ln)]
        with open(checkpoint_path, "a") as fh:
            fh.write(_canonical({"integrity": _sha("\n".join(body))}) + "\n")

    ordered = [outcomes[t.task_id] for t in plan.tasks]
    return CampaignReport(
        plan_name=plan.name,
        plan_hash=phash,
        outcomes=ordered,
        truncated=bool(plan.meta.get("box_limit")),
    )


# ---------------------------------------------------------------------------
# Plan builders for the three published campaign shapes (general family).


def _choose_l(*exponents: int, given: int | None = None) -> int:
    if given is not None:
        if given not in _PLAN_L_CHOICES:
            raise ValueError(f"l must come from {_PLAN_L_CHOICES}")
        if any(e % given == 0 for e in exponents):
            raise ValueError(f"l={given} divides an exponent")
        return given
    for l in _PLAN_L_CHOICES:
        if all(e % l for e in exponents):
            return l
    raise ValueError("no admissible auxiliary prime for these exponents")


def _smooth_values_under(cap: Fraction, coprime_to: tuple[int, ...],
                         limit: int | None) -> list[int]:
    vals = []
    m = 1
    while True:
        if limit is not None and m > limit:
            break
        if log_of_int(m) > LinLog.of(cap):
            break
        if all(m % p for p in coprime_to):
            vals.append(m)
        m += 1
    return vals


def _spec_for(profile_var, smooth: int, l: int, box_limit: int | None) -> dict:
    cap = 6 if box_limit else None  # truncation keeps desk-scale boxes small
    return {
        "smooth": smooth,
        "l": l,
        "e2_cap": min(profile_var.cap_e2, cap) if cap else profile_var.cap_e2,
        "e3_cap": min(profile_var.cap_e3, cap) if cap else profile_var.cap_e3,
        "el_cap": min(profile_var.cap_el, cap) if cap else profile_var.cap_el,
        "lparts": list(profile_var.lpart_candidates or (1,)),
    }


def build_p1_plan(r: int, s: int, *, l: int | None = None,
                  box_limit: int | None = None) -> CampaignPlan:
    """Low exponents against a forced 2-power third coordinate (t >= 70)."""
    if not 4 <= r <= s < 70:
        raise ValueError("plan needs 4 <= r <= s < 70")
    l = _choose_l(r, s, given=l)
    a1 = a1_coefficient("general-2tor-alt", l)
    a2 = Fraction(A2_TABLES["general-2tor-alt"][l])
    cap = a2 / (Fraction(r) + Fraction(s) - 2 * a1)
    prof = structure_profile("general", (max(r, 4), max(s, 4), 70), l)
    tasks = []
    for name, expo, other in (("x", r, s), ("y", s, r)):
        var = prof.variables[name]
        for smooth in _smooth_values_under(cap, (2, l), box_limit):
            spec = _spec_for(var, smooth, l, box_limit)
            spec["e2_cap"] = 0  # this coordinate is odd: the 2-power is z
            tasks.append(Task(
                task_id=f"p1-{name}{smooth}",
                kind="tail",
                params={"spec": spec, "s": expo, "r_set": [other],
                        "m_lo": 70, "m_hi": 306},
            ))
    return CampaignPlan(
        name=f"P1({r},{s};l={l})", tasks=tasks,
        meta={"r": r, "s": s, "l": l, "box_limit": box_limit,
              "smooth_cap": str(cap)},
    )


def _pair_plan(kind: str, r: int, s: int, t: int, l: int | None,
               box_limit: int | None) -> CampaignPlan:
    l = _choose_l(r, s, t, given=l)
    a1 = a1_coefficient("general-2tor-alt", l)
    a2 = Fraction(A2_TABLES["general-2tor-alt"][l])
    rp, sp, tp = Fraction(r) - a1, Fraction(s) - a1, Fraction(t) - a1
    prof = structure_profile("general", (r, s, t), l)
    tasks = []
    if kind == "P2":
        if not t >= r + s - 3:
            raise ValueError("P2 needs t >= r + s - 3")
        groups = [("x", r, "z", t, s, rp + sp, tp), ("y", s, "z", t, r, rp + sp, tp)]
        for na, ea, nb, eb, third, ca, cb in groups:
            for sa in _smooth_values_under(a2 / ca, (2, l), box_limit):
                rem = a2 - ca * log_linlog_cap(sa)
                for sb in _smooth_values_under(rem / cb, (2, l), box_limit):
                    tasks.append(_pair_task(prof, na, sa, ea, nb, sb, eb,
                                            [third], l, box_limit))
    else:
        if not t <= r + s - 4:
            raise ValueError("P3 needs t <= r + s - 4")
        joint = 2 * a2 / (rp + sp + tp)
        groups = [("x", r, "y", s, t), ("x", r, "z", t, s), ("y", s, "z", t, r)]
        for na, ea, nb, eb, third in groups:
            for sa in _smooth_values_under(joint, (2, l), box_limit):
                rem = joint - log_linlog_cap(sa)
                for sb in _smooth_values_under(rem, (2, l), box_limit):
                    tasks.append(_pair_task(prof, na, sa, ea, nb, sb, eb,
                                            [third], l, box_limit))
    return CampaignPlan(
        name=f"{kind}({r},{s},{t};l={l})", tasks=tasks,
        meta={"r": r, "s": s, "t": t, "l": l, "box_limit": box_limit},
    )


def log_linlog_cap(m: int) -> Fraction:
    """A certified rational upper bound on log(m)."""
    import math as _math

    if m == 1:
        return Fraction(0)
    hi = Fraction(_math.log(m)).limit_denominator(10**12) + Fraction(1, 10**9)
    assert LinLog.of(hi) > log_of_int(m)
    return hi


def _pair_task(prof, na, sa, ea, nb, sb, eb, t_set, l, box_limit) -> Task:
    return Task(
        task_id=f"pair-{na}{sa}-{nb}{sb}-e{ea}x{eb}",
        kind="pair",
        params={
            "a": _spec_for(prof.variables[na], sa, l, box_limit),
            "r": ea,
            "b": _spec_for(prof.variables[nb], sb, l, box_limit),
            "s": eb,
            "t_set": sorted(t_set),
        },
    )


def build_p2_plan(r: int, s: int, t: int, *, l: int | None = None,
                  box_limit: int | None = None) -> CampaignPlan:
    """Balanced exponents, third coordinate dominant (t >= r + s - 3)."""
    return _pair_plan("P2", r, s, t, l, box_limit)


def build_p3_plan(r: int, s: int, t: int, *, l: int | None = None,
                  box_limit: int | None = None) -> CampaignPlan:
    """Balanced exponents, joint pair bound (t <= r + s - 4)."""
    return _pair_plan("P3", r, s, t, l, box_limit)


def explicit_box_task(task_id: str, xs, r: int, ys, s: int, t_set) -> Task:
    """A direct finite box over explicit candidate lists."""
    return Task(
        task_id=task_id,
        kind="pair",
        params={"a": {"values": sorted(xs)}, "r": r,
                "b": {"values": sorted(ys)}, "s": s, "t_set": sorted(set(t_set))},
    )
