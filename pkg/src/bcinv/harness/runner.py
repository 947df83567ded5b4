"""Exhaustive and sampled verification of registered claims, and hunts."""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..errors import InconsistencyError
from ..ring import RingHandle, build_ring, format_ring_spec, parse_ring_spec
from .claims import Claim, get_claim
from .context import context_for

DEFAULT_BUDGET = 50_000_000
MAX_RECORDED_FAILURES = 1000


class BudgetExceeded(ValueError):
    pass


def default_budget() -> int:
    return int(float(os.environ.get("BCINV_BUDGET", DEFAULT_BUDGET)))


@dataclass(frozen=True)
class Mode:
    kind: str  # "exhaustive" or "sample"
    seed: int | None = None
    count: int | None = None

    @classmethod
    def parse(cls, text: str | "Mode") -> "Mode":
        if isinstance(text, Mode):
            return text
        if text == "exhaustive":
            return cls("exhaustive")
        parts = text.split(":")
        if len(parts) == 3 and parts[0] == "sample":
            seed, count = int(parts[1]), int(parts[2])
            if count < 0:
                raise ValueError("sample count must be non-negative")
            return cls("sample", seed, count)
        raise ValueError(f"mode must be 'exhaustive' or 'sample:<seed>:<count>', got {text!r}")

    def __str__(self) -> str:
        return "exhaustive" if self.kind == "exhaustive" else f"sample:{self.seed}:{self.count}"


@dataclass
class TheoremReport:
    claim: str
    ring: str
    mode: str
    seed: int | None
    expected: str
    cases: int
    failed: int
    failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failed == 0

    @property
    def verdict(self) -> str:
        if self.expected == "holds":
            return "pass" if self.passed else "fail"
        return "counterexample-found" if self.failed else "no-counterexample"

    def to_json(self) -> dict:
        return {
            "claim": self.claim, "ring": self.ring, "mode": self.mode, "seed": self.seed,
            "expected": self.expected, "verdict": self.verdict, "cases": self.cases,
            "failed": self.failed, "failures": self.failures,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _ring_name(ring) -> str:
    if isinstance(ring, RingHandle):
        return ring.name
    return format_ring_spec(parse_ring_spec(ring)) if isinstance(ring, str) else format_ring_spec(ring)


def _failure(ctx, claim: Claim, tup, conds) -> dict:
    return {
        "tuple": {n: ctx.ring.format_code(int(v)) for n, v in zip(claim.names, tup)},
        "conditions": {k: (bool(v) if isinstance(v, (bool, np.bool_)) else v) for k, v in conds.items()},
    }


def _evaluate(ctx, claim: Claim, tup):
    try:
        ok, conds = claim.predicate(ctx, tup)
    except InconsistencyError as exc:
        return False, {"error": str(exc)}
    return bool(ok), conds


def _run_slice(claim_id: str, spec: str, tuples, limit: int):
    """Evaluate ``tuples``; returns (cases, failed, recorded failures)."""
    claim = get_claim(claim_id)
    ctx = context_for(spec)
    cases = failed = 0
    recorded = []
    for tup in tuples:
        cases += 1
        ok, conds = _evaluate(ctx, claim, tup)
        if not ok:
            failed += 1
            if len(recorded) < limit:
                recorded.append(_failure(ctx, claim, tup, conds))
    return cases, failed, recorded


def _exhaustive_slice(claim_id, spec, arity, n, start, stop, limit):
    tuples = itertools.islice(itertools.product(range(n), repeat=arity), start, stop)
    return _run_slice(claim_id, spec, tuples, limit)


def _sample_slice(claim_id, spec, rows, limit):
    return _run_slice(claim_id, spec, (tuple(int(v) for v in r) for r in rows), limit)


def _bounds(total: int, parts: int):
    step = -(-total // parts) if total else 0
    return [(i * step, min(total, (i + 1) * step)) for i in range(parts) if i * step < total]


def verify(claim_id: str, ring, mode="exhaustive", *, workers: int = 1,
           budget: int | None = None) -> TheoremReport:
    """Run one claim over one ring.

    Exhaustive mode walks all tuples in lexicographic code order; sample
    mode draws ``count`` tuples from a generator seeded with ``seed``.  With
    ``workers > 1`` the tuple list is split into contiguous partitions whose
    results are merged in partition order, so the report does not depend on
    the worker count.
    """
    claim = get_claim(claim_id)
    mode = Mode.parse(mode)
    spec = _ring_name(ring)
    handle = build_ring(spec)
    n = handle.cardinality
    budget = default_budget() if budget is None else budget
    start_t = time.perf_counter()

    if mode.kind == "exhaustive":
        total = n ** claim.arity
        if total > budget:
            raise BudgetExceeded(f"{claim_id} on {spec}: {total} tuples exceeds budget {budget}")
        jobs = [(_exhaustive_slice, (claim_id, spec, claim.arity, n, lo, hi))
                for lo, hi in _bounds(total, max(1, workers))]
    else:
        rng = np.random.default_rng(mode.seed)
        rows = rng.integers(0, n, size=(mode.count, claim.arity))
        jobs = [(_sample_slice, (claim_id, spec, rows[lo:hi]))
                for lo, hi in _bounds(mode.count, max(1, workers))]

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(fn, *args, MAX_RECORDED_FAILURES) for fn, args in jobs]
            parts = [f.result() for f in futures]
    else:
        parts = [fn(*args, MAX_RECORDED_FAILURES) for fn, args in jobs]

    cases = sum(p[0] for p in parts)
    failed = sum(p[1] for p in parts)
    failures = [f for p in parts for f in p[2]][:MAX_RECORDED_FAILURES]
    elapsed = (time.perf_counter() - start_t) * 1000.0
    return TheoremReport(claim_id, spec, str(mode), mode.seed, claim.expected, cases, failed,
                         failures, elapsed)


@dataclass
class HuntResult:
    claim: str
    found: bool
    ring: str | None = None
    tuple: dict | None = None
    conditions: dict | None = None
    rings_scanned: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"claim": self.claim, "found": self.found, "rings_scanned": self.rings_scanned}
        if self.found:
            out.update(ring=self.ring, tuple=self.tuple, conditions=self.conditions)
        return out


def expand_rings(text: str) -> list[str]:
    """``"zmod:2..4,mat:2:zmod:2"`` -> each ring spec, ranges expanded inclusively."""
    out = []
    for part in _split_specs(text):
        if part.startswith("zmod:") and ".." in part:
            lo, hi = part[5:].split("..")
            out.extend(f"zmod:{k}" for k in range(int(lo), int(hi) + 1))
        else:
            out.append(_ring_name(part))
    return out


def _split_specs(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur).strip())
    return [p for p in parts if p]


def hunt(claim_id: str, rings, *, budget: int | None = None) -> HuntResult:
    """First ``(ring, tuple)`` in scan order where a hunt claim's statement fails."""
    claim = get_claim(claim_id)
    if not claim.is_hunt:
        raise ValueError(f"{claim_id} is expected to hold; only fails-somewhere claims can be hunted")
    if isinstance(rings, str):
        rings = expand_rings(rings)
    budget = default_budget() if budget is None else budget
    scanned = []
    for ring in rings:
        spec = _ring_name(ring)
        ctx = context_for(spec)
        if ctx.n ** claim.arity > budget:
            raise BudgetExceeded(f"{claim_id} on {spec} exceeds budget {budget}")
        scanned.append(spec)
        for tup in itertools.product(range(ctx.n), repeat=claim.arity):
            ok, conds = _evaluate(ctx, claim, tup)
            if not ok:
                f = _failure(ctx, claim, tup, conds)
                return HuntResult(claim_id, True, spec, f["tuple"], f["conditions"], scanned)
    return HuntResult(claim_id, False, rings_scanned=scanned)
