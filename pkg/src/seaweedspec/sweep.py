"""Exhaustive and targeted conjecture sweeps.

The unimodality sweep enumerates every pair of compositions of each n in
range, records index and shape data for each, treats any failure of the
proven support properties (unbroken interval, endpoints summing to one) as
an engine bug, and collects unimodality failures as findings. The
stability sweeps walk small parameter grids of the three extension
conjectures instead.

Work is a stateless map over composition pairs; a single writer appends
one NDJSON record per pair, so reruns with --resume skip finished keys and
worker count never changes the output.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Iterator

from ._engine import kernel
from .analysis import (
    EngineInvariantError,
    is_log_concave,
    is_symmetric_about_half,
    is_unbroken_centered_half,
    is_unimodal,
)
from .core import (
    Composition,
    IntegerMultiset,
    ParseError,
    SeaweedSpec,
    compositions_of,
    parse_seaweed,
)
from .spectrum import spectrum

CONJECTURES = (
    "unimodal_2_8",
    "stability_4_16",
    "stability_4_17",
    "stability_4_18",
    "none",
)

EXTENSION_VARIANTS = ("r_blocks", "r_blocks_plus_k")


@dataclass
class SweepJob:
    conjecture: str = "unimodal_2_8"
    n_min: int = 1
    n_max: int = 10
    k_max: int = 8
    r_max: int = 6
    base: str | None = None
    out: str | None = None
    workers: int = 1
    resume: bool = False

    def __post_init__(self) -> None:
        if self.conjecture not in CONJECTURES:
            raise ValueError(
                f"conjecture must be one of {CONJECTURES}, got {self.conjecture!r}"
            )
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError(f"bad n range [{self.n_min}, {self.n_max}]")
        if self.k_max < 1 or self.r_max < 1:
            raise ValueError("k_max and r_max must be at least 1")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")
        if self.resume and not self.out:
            raise ValueError("resume needs an output path to read back")


def read_records(path: str) -> list[dict]:
    """Load an NDJSON record file, stopping hard on a corrupt line."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                raise ParseError(f"corrupt sweep record at {path}:{lineno}") from None
            if not isinstance(rec, dict) or "key" not in rec:
                raise ParseError(f"corrupt sweep record at {path}:{lineno}")
            records.append(rec)
    return records


class _Writer:
    """Append-only NDJSON sink; a no-op without a path."""

    def __init__(self, path: str | None):
        self._fh = open(path, "a", encoding="utf-8") if path else None

    def write(self, rec: dict) -> None:
        if self._fh:
            self._fh.write(json.dumps(rec) + "\n")

    def close(self) -> None:
        if self._fh:
            self._fh.close()


def _load_completed(job: SweepJob) -> tuple[set[str], list[dict]]:
    if not (job.resume and job.out and os.path.exists(job.out)):
        return set(), []
    existing = [r for r in read_records(job.out) if r.get("conjecture") == job.conjecture]
    return {r["key"] for r in existing}, existing


def enumerate_frobenius(n: int) -> Iterator[SeaweedSpec]:
    """All Frobenius seaweeds on n vertices, in composition-pair order."""
    tops = list(compositions_of(n))
    for top in tops:
        for bottom in tops:
            cycles, paths = kernel.component_counts(top.parts, bottom.parts)
            if cycles == 0 and paths == 1:
                yield SeaweedSpec(top, bottom)


def _spec_text(top: tuple, bottom: tuple) -> str:
    return "|".join(map(str, top)) + " / " + "|".join(map(str, bottom))


def _pair_record(args: tuple) -> dict:
    """Record for one composition pair; runs inside worker processes."""
    conjecture, top, bottom = args
    t0 = time.perf_counter()
    cycles, paths = kernel.component_counts(top, bottom)
    index = 2 * cycles + paths - 1
    rec: dict = {
        "conjecture": conjecture,
        "key": _spec_text(top, bottom),
        "spec": _spec_text(top, bottom),
        "index": index,
        "frobenius": index == 0,
        "unbroken": None,
        "centered_half": None,
        "unimodal": None,
        "log_concave": None,
        "symmetric_about_half": None,
        "spectrum": None,
    }
    if index == 0:
        counts = kernel.spectrum_counts(top, bottom)
        s = IntegerMultiset(counts).without_one(0)
        rec["spectrum"] = s.to_json_obj()
        if s:
            unbroken, centered = is_unbroken_centered_half(s)
            rec["unbroken"] = unbroken
            rec["centered_half"] = unbroken and centered
            rec["unimodal"] = is_unimodal(s)
            rec["log_concave"] = is_log_concave(s)
            rec["symmetric_about_half"] = is_symmetric_about_half(s)
    rec["elapsed"] = time.perf_counter() - t0
    return rec


def _map_records(workers: int, items: Iterable[tuple]) -> Iterator[dict]:
    if workers <= 1:
        yield from map(_pair_record, items)
        return
    with Pool(workers) as pool:
        yield from pool.imap(_pair_record, items, chunksize=256)


def _check_proven_claims(rec: dict) -> None:
    if not rec["frobenius"] or not rec["spectrum"]:
        return
    if rec["unbroken"] is False:
        raise EngineInvariantError(
            f"{rec['spec']}: spectrum support has gaps, which is impossible: {rec['spectrum']}"
        )
    if rec["centered_half"] is False:
        raise EngineInvariantError(
            f"{rec['spec']}: spectrum endpoints do not sum to 1, which is impossible: {rec['spectrum']}"
        )
    if rec["log_concave"] and rec["unimodal"] is False:
        raise EngineInvariantError(
            f"{rec['spec']}: log-concave profile marked non-unimodal; predicates disagree"
        )


def run_unimodality_sweep(job: SweepJob) -> dict:
    """Exhaustive sweep over all composition pairs for n in job's range.

    Returns the summary; raises EngineInvariantError if a proven property
    fails. Unimodality failures (conjecture counterexamples) land in the
    summary, not in an exception.
    """
    completed, existing = _load_completed(job)
    writer = _Writer(job.out)
    pairs = 0
    skipped = 0
    frobenius_count = 0
    counterexamples = []
    seen: dict[str, dict] = {r["key"]: r for r in existing}
    collect = job.conjecture == "unimodal_2_8"

    def consume(rec: dict) -> None:
        nonlocal frobenius_count
        _check_proven_claims(rec)
        if rec["frobenius"]:
            frobenius_count += 1
        if collect and rec["unimodal"] is False:
            counterexamples.append({"spec": rec["spec"], "spectrum": rec["spectrum"]})

    try:
        for n in range(job.n_min, job.n_max + 1):
            tops = [c.parts for c in compositions_of(n)]
            todo = []
            for top in tops:
                for bottom in tops:
                    pairs += 1
                    key = _spec_text(top, bottom)
                    if key in completed:
                        skipped += 1
                        consume(seen[key])
                    else:
                        todo.append((job.conjecture, top, bottom))
            for rec in _map_records(job.workers, todo):
                writer.write(rec)
                consume(rec)
    finally:
        writer.close()

    counterexamples.sort(key=lambda c: c["spec"])
    return {
        "conjecture": job.conjecture,
        "n_min": job.n_min,
        "n_max": job.n_max,
        "pairs": pairs,
        "resumed": skipped,
        "frobenius": frobenius_count,
        "engine_invariant_failures": 0,
        "counterexamples": counterexamples,
    }


def default_extension_base(k: int) -> SeaweedSpec:
    """The stock Frobenius base with trailing top part k: (k+1)|k over 2k+1."""
    return SeaweedSpec(Composition((k + 1, k)), Composition((2 * k + 1,)))


def extension_variant_spec(base: SeaweedSpec, k: int, r: int, variant: str) -> SeaweedSpec:
    """The enlarged seaweed: r blocks of 2k appended to a base ending in k.

    "r_blocks" moves the trailing k to the bottom; "r_blocks_plus_k" keeps
    it on top after the new blocks.
    """
    if variant not in EXTENSION_VARIANTS:
        raise ValueError(f"variant must be one of {EXTENSION_VARIANTS}, got {variant!r}")
    a = base.top.parts
    if a[-1] != k:
        raise ValueError(f"base top must end in k={k}, got {base.top}")
    if variant == "r_blocks":
        top = a[:-1] + (2 * k,) * r
        bottom = base.bottom.parts + (2 * k,) * (r - 1) + (k,)
    else:
        top = a[:-1] + (2 * k,) * r + (k,)
        bottom = base.bottom.parts + (2 * k,) * r
    return SeaweedSpec(Composition(top), Composition(bottom))


def _stability_4_16_records(job: SweepJob) -> Iterator[dict]:
    if job.base is not None:
        base = parse_seaweed(job.base)
        bases = [(base, base.top.parts[-1])]
    else:
        bases = [(default_extension_base(k), k) for k in range(1, job.k_max + 1)]
    for base, k in bases:
        s_base = spectrum(base)  # raises if the base is not Frobenius
        base_values = set(s_base.support())
        base_unimodal = is_unimodal(s_base) if s_base else None
        for r in range(1, job.r_max + 1):
            for variant in EXTENSION_VARIANTS:
                t0 = time.perf_counter()
                g = extension_variant_spec(base, k, r, variant)
                rec: dict = {
                    "conjecture": "stability_4_16",
                    "key": str(g),
                    "spec": str(g),
                    "base": str(base),
                    "k": k,
                    "r": r,
                    "variant": variant,
                    "frobenius": False,
                    "contains_base": None,
                    "no_new_values": None,
                    "unimodal_inherited": None,
                    "spectrum": None,
                }
                cycles, paths = kernel.component_counts(g.top.parts, g.bottom.parts)
                if cycles == 0 and paths == 1:
                    rec["frobenius"] = True
                    s = spectrum(g)
                    rec["spectrum"] = s.to_json_obj()
                    rec["contains_base"] = s.contains(s_base)
                    extra = s - s_base if rec["contains_base"] else None
                    rec["no_new_values"] = (
                        set(extra.support()) <= base_values if extra is not None else False
                    )
                    if base_unimodal:
                        rec["unimodal_inherited"] = is_unimodal(s)
                rec["passed"] = bool(
                    rec["frobenius"]
                    and rec["contains_base"]
                    and rec["no_new_values"]
                    and rec["unimodal_inherited"] is not False
                )
                rec["elapsed"] = time.perf_counter() - t0
                yield rec


def _stability_4_17_records(job: SweepJob) -> Iterator[dict]:
    for k in range(1, job.k_max + 1):
        for r in range(1, job.r_max + 1):
            t0 = time.perf_counter()
            g = SeaweedSpec(
                Composition((2 * k,) * r + (1,)),
                Composition((2 * k * r + 1,)),
            )
            if r % 2 == 1:
                expected = tuple(range(-2 * k + 1, 2 * k + 1))
            else:
                expected = tuple(range(-k, k + 2))
            rec: dict = {
                "conjecture": "stability_4_17",
                "key": str(g),
                "spec": str(g),
                "k": k,
                "r": r,
                "frobenius": False,
                "expected_support": list(expected),
                "support_matches": None,
                "unimodal": None,
                "spectrum": None,
            }
            cycles, paths = kernel.component_counts(g.top.parts, g.bottom.parts)
            if cycles == 0 and paths == 1:
                rec["frobenius"] = True
                s = spectrum(g)
                rec["spectrum"] = s.to_json_obj()
                rec["support_matches"] = s.support() == expected
                rec["unimodal"] = is_unimodal(s)
            rec["passed"] = bool(
                rec["frobenius"] and rec["support_matches"] and rec["unimodal"]
            )
            rec["elapsed"] = time.perf_counter() - t0
            yield rec


def _stability_4_18_records(job: SweepJob) -> Iterator[dict]:
    cache: dict[tuple[int, int], IntegerMultiset] = {}

    def grid_spectrum(k: int, r: int) -> IntegerMultiset | None:
        if (k, r) not in cache:
            g = SeaweedSpec(
                Composition((2 * k,) * r + (1,)),
                Composition((1,) + (2 * k,) * r),
            )
            cycles, paths = kernel.component_counts(g.top.parts, g.bottom.parts)
            cache[(k, r)] = spectrum(g) if cycles == 0 and paths == 1 else None
        return cache[(k, r)]

    for k in range(1, job.k_max + 1):
        for r in range(1, job.r_max + 1):
            t0 = time.perf_counter()
            g = SeaweedSpec(
                Composition((2 * k,) * r + (1,)),
                Composition((1,) + (2 * k,) * r),
            )
            rec: dict = {
                "conjecture": "stability_4_18",
                "key": str(g),
                "spec": str(g),
                "k": k,
                "r": r,
                "frobenius": False,
                "expected_support": list(range(-k + 1, k + 1)),
                "support_matches": None,
                "log_concave": None,
                "shift_matches": None,
                "spectrum": None,
            }
            s = grid_spectrum(k, r)
            if s is not None:
                rec["frobenius"] = True
                rec["spectrum"] = s.to_json_obj()
                rec["support_matches"] = s.support() == tuple(range(-k + 1, k + 1))
                rec["log_concave"] = is_log_concave(s)
                s_next = grid_spectrum(k + 1, r)
                if s_next is None:
                    rec["shift_matches"] = False
                else:
                    ok = all(
                        s.multiplicity(i) == s_next.multiplicity(i - 1)
                        for i in range(-k + 1, 1)
                    ) and all(
                        s.multiplicity(i) == s_next.multiplicity(i + 1)
                        for i in range(1, k + 1)
                    )
                    rec["shift_matches"] = ok
            rec["passed"] = bool(
                rec["frobenius"]
                and rec["support_matches"]
                and rec["log_concave"]
                and rec["shift_matches"]
            )
            rec["elapsed"] = time.perf_counter() - t0
            yield rec


def run_stability_sweep(job: SweepJob) -> dict:
    """Walk one extension conjecture's parameter grid and collect failures."""
    makers = {
        "stability_4_16": _stability_4_16_records,
        "stability_4_17": _stability_4_17_records,
        "stability_4_18": _stability_4_18_records,
    }
    if job.conjecture not in makers:
        raise ValueError(f"not a stability conjecture: {job.conjecture!r}")
    completed, existing = _load_completed(job)
    writer = _Writer(job.out)
    checked = 0
    skipped = 0
    counterexamples = []
    seen = {r["key"]: r for r in existing}

    def consume(rec: dict) -> None:
        if not rec["passed"]:
            failed = [
                name
                for name in (
                    "frobenius",
                    "contains_base",
                    "no_new_values",
                    "unimodal_inherited",
                    "support_matches",
                    "unimodal",
                    "log_concave",
                    "shift_matches",
                )
                if rec.get(name) is False
            ]
            counterexamples.append({"spec": rec["spec"], "failed": failed})

    try:
        for rec in makers[job.conjecture](job):
            checked += 1
            if rec["key"] in completed:
                skipped += 1
                consume(seen[rec["key"]])
                continue
            writer.write(rec)
            consume(rec)
    finally:
        writer.close()

    counterexamples.sort(key=lambda c: c["spec"])
    summary = {
        "conjecture": job.conjecture,
        "k_max": job.k_max,
        "r_max": job.r_max,
        "checked": checked,
        "resumed": skipped,
        "counterexamples": counterexamples,
    }
    if job.conjecture == "stability_4_16":
        summary["base"] = job.base if job.base else "default per-k bases"
    return summary


def run_sweep(job: SweepJob) -> dict:
    """Dispatch on the job's conjecture; returns the summary object."""
    if job.conjecture in ("unimodal_2_8", "none"):
        return run_unimodality_sweep(job)
    return run_stability_sweep(job)
