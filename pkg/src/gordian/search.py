"""Randomized search for knots one or more crossing changes away from a base.

Each trial scrambles the base diagram with random Reidemeister moves, turns
the scramble into a braid, flips ``k_changes`` random braid letters, and
fingerprints the result.  Everything is driven by per-trial seeds derived
from the configured seed, so a run is reproducible letter for letter and
any hit can be replayed from its log line alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .braid import (
    BraidWord,
    braid_closure,
    flip_letters,
    parse_braid,
    render_braid,
    vogel_braid,
)
from .diagram import PDDiagram
from .errors import InputError, ResourceError, UnrealizableError
from .identify import KnotTableEntry, default_table, identify
from .invariants import Fingerprint, fingerprint
from .moves import backtrack_randomize

# A scramble larger than this is braided at quadratic cost for no benefit;
# the trial is skipped instead.
MAX_CROSSINGS_BEFORE_BRAIDING = 120


@dataclass(frozen=True)
class SearchConfig:
    seed: int
    trials: int = 1
    k_changes: int = 1
    n_backtrack: int = 30
    max_crossings_for_id: int = 16
    targets: tuple[str, ...] = ()


@dataclass(frozen=True)
class SearchHit:
    trial: int
    seed: int
    braid: BraidWord  # the braid before any letters were flipped
    flips: tuple[int, ...]
    result: str
    fingerprint: Fingerprint


def _trial_seed(seed: int, trial: int) -> int:
    return (seed * 1_000_003 + trial) % 2**31


def _compact(text: str) -> str:
    return text.replace(" ", "")


def _result_token(
    matches: list[tuple[str, str]], fp: Fingerprint, base_fp: Fingerprint
) -> str:
    if matches:
        return ";".join(
            name if chirality == "as-listed" else f"{name}(mirror)"
            for name, chirality in matches
        )
    if fp == base_fp:
        return "base"
    return "?"


def _hit_line(
    trial: int, seed: int, braid: BraidWord, flips, result: str, fp_text: str
) -> str:
    flip_text = "[" + ",".join(str(i) for i in flips) + "]"
    return (
        f"{trial} {seed} {_compact(render_braid(braid))} "
        f"{flip_text} {result} {fp_text}"
    )


def evaluate_candidate(
    braid: BraidWord,
    flips,
    base_fp: Fingerprint,
    table: list[KnotTableEntry],
    *,
    seed: int = 0,
) -> tuple[str, Fingerprint]:
    """Flip the given letters, close the braid, and name the outcome."""
    changed = flip_letters(braid, flips)
    fp = fingerprint(braid_closure(changed), seed=seed)
    return _result_token(identify(fp, table), fp, base_fp), fp


def _is_hit(result: str, fp: Fingerprint, cfg: SearchConfig) -> bool:
    if cfg.targets:
        names = {token.split("(")[0] for token in result.split(";")}
        return bool(names & set(cfg.targets))
    if result == "base":
        return True
    return result != "?" and fp.min_crossings_seen <= cfg.max_crossings_for_id


def run_pipeline(
    base: PDDiagram,
    cfg: SearchConfig,
    table: list[KnotTableEntry] | None = None,
    log=None,
) -> list[SearchHit]:
    """Run all trials; emit one log line per trial via ``log``; return hits.

    Trials that exhaust a resource limit (scramble too large, state sum
    over the crossing cap) are skipped, not fatal: the log line carries the
    error type and the search moves on.
    """
    if table is None:
        table = default_table()
    base_fp = fingerprint(base, seed=cfg.seed)
    hits: list[SearchHit] = []
    for trial in range(cfg.trials):
        tseed = _trial_seed(cfg.seed, trial)
        rng = random.Random(tseed)
        try:
            scramble = backtrack_randomize(base, cfg.n_backtrack, seed=tseed)
            if scramble.n > MAX_CROSSINGS_BEFORE_BRAIDING:
                raise ResourceError(
                    f"scramble has {scramble.n} crossings "
                    f"(cap {MAX_CROSSINGS_BEFORE_BRAIDING})"
                )
            braid = vogel_braid(scramble)
            if cfg.k_changes > len(braid):
                raise ResourceError(
                    f"braid has only {len(braid)} letters, "
                    f"cannot flip {cfg.k_changes}"
                )
            flips = tuple(sorted(rng.sample(range(len(braid)), cfg.k_changes)))
            result, fp = evaluate_candidate(
                braid, flips, base_fp, table, seed=tseed
            )
        except (ResourceError, UnrealizableError) as exc:
            if log is not None:
                log(f"{trial} {tseed} - - skip({type(exc).__name__}) -")
            continue
        if log is not None:
            log(_hit_line(trial, tseed, braid, flips, result, fp.render()))
        if _is_hit(result, fp, cfg):
            hits.append(SearchHit(trial, tseed, braid, flips, result, fp))
    return hits


def replay_line(
    line: str,
    base: PDDiagram,
    table: list[KnotTableEntry] | None = None,
) -> tuple[bool, str]:
    """Recompute a log line from its braid and flips.

    Returns (verdict, recomputed line); the verdict is True only when the
    recomputation reproduces the line byte for byte.
    """
    if table is None:
        table = default_table()
    fields = line.split()
    if len(fields) != 6:
        raise InputError(f"a hit line has 6 fields, got {len(fields)}")
    trial_text, seed_text, braid_text, flip_text, _, _ = fields
    try:
        trial, seed = int(trial_text), int(seed_text)
    except ValueError as exc:
        raise InputError(f"bad trial or seed in {line!r}") from exc
    braid = parse_braid(braid_text)
    if not (flip_text.startswith("[") and flip_text.endswith("]")):
        raise InputError(f"bad flip list {flip_text!r}")
    body = flip_text[1:-1]
    flips = tuple(int(tok) for tok in body.split(",")) if body else ()
    base_fp = fingerprint(base, seed=seed)
    result, fp = evaluate_candidate(braid, flips, base_fp, table, seed=seed)
    rebuilt = _hit_line(trial, seed, braid, flips, result, fp.render())
    return rebuilt == line.strip(), rebuilt


def replay_hit(
    hit: SearchHit,
    base: PDDiagram,
    table: list[KnotTableEntry] | None = None,
) -> bool:
    """Re-verify a hit object: same flips on the same braid, same outcome."""
    if table is None:
        table = default_table()
    base_fp = fingerprint(base, seed=hit.seed)
    result, fp = evaluate_candidate(
        hit.braid, hit.flips, base_fp, table, seed=hit.seed
    )
    return result == hit.result and fp == hit.fingerprint
