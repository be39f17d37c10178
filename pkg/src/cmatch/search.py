"""Resumable counterexample search over streams of candidate graphs.

Instances come from a generator spec string or a graph6 file and are judged
against the target bound "connected matching number >= t".  Each instance
yields exactly one JSONL record:

- PASS: a matching of size >= t was found (greedy screen or exact solver);
- COUNTEREXAMPLE-CANDIDATE: the exact solver completed below t, so every
  structure checker is run and its verdict attached;
- INCONCLUSIVE: the exact budget ran out below t;
- SKIPPED: the instance is outside the domain (wrong vertex count or an
  independent triple), logged rather than silently dropped.

Records never contain wall-clock data, only deterministic work counts, so a
run is reproducible byte for byte.  A cursor sidecar file ("<out>.cursor",
decimal count of committed records) makes interrupted runs resumable: the
output is trimmed to the committed prefix and generation continues from
there, producing the same bytes an uninterrupted run would have.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional

from . import generators
from .graphs import Graph, GraphError, encode_graph6, independence_at_most_2, parse_graph6
from .matchings import greedy_connected_matching, max_connected_matching
from .verifiers import run_checker

PASS = "PASS"
CANDIDATE = "COUNTEREXAMPLE-CANDIDATE"
INCONCLUSIVE = "INCONCLUSIVE"
SKIPPED = "SKIPPED"

VERDICTS = (PASS, CANDIDATE, INCONCLUSIVE, SKIPPED)

_FAMILIES = ("twoclique+", "twoclique", "rand", "c5blowup", "enum")


class SearchError(Exception):
    """Fatal harness problem: bad source spec, unreadable input, corrupt cursor."""


@dataclass(frozen=True)
class SearchConfig:
    t: int
    seed: int = 0
    greedy_restarts: int = 64
    exact_budget: Optional[int] = 10**7
    trials: int = 1000
    jobs: int = 1
    limit: Optional[int] = None  # stop after this many records (for tests)


def _parse_params(text: str, spec: str) -> dict[str, str]:
    params: dict[str, str] = {}
    if text:
        for part in text.split(","):
            if "=" not in part:
                raise SearchError(f"bad parameter {part!r} in source spec {spec!r}")
            key, value = part.split("=", 1)
            params[key.strip()] = value.strip()
    return params


def _int_param(params: dict[str, str], key: str, spec: str, default=None) -> int:
    if key not in params:
        if default is None:
            raise SearchError(f"source spec {spec!r} is missing {key}=")
        return default
    try:
        return int(params[key])
    except ValueError:
        raise SearchError(f"{key}= in source spec {spec!r} is not an integer") from None


def iter_instances(spec: str, config: SearchConfig) -> Iterator[tuple[int, str, Optional[int]]]:
    """Yield (index, graph6 line, instance seed) for a source spec.

    The spec is either "<family>:<k=v,...>" for a known generator family or
    a path to a graph6 file with one graph per line.  File instances and
    enumerated instances carry no seed of their own.
    """
    family, sep, rest = spec.partition(":")
    if sep and family in _FAMILIES:
        params = _parse_params(rest, spec)
        if family in ("twoclique", "twoclique+"):
            t = _int_param(params, "t", spec)
            make = generators.two_cliques if family == "twoclique" else generators.two_cliques_plus
            try:
                graphs: Iterable[Graph] = [make(t)]
            except GraphError as exc:
                raise SearchError(f"bad parameters in {spec!r}: {exc}") from exc
            return ((i, encode_graph6(g), None) for i, g in enumerate(graphs))
        if family == "c5blowup":
            if "sizes" not in params:
                raise SearchError(f"source spec {spec!r} is missing sizes=")
            try:
                sizes = tuple(int(tok) for tok in params["sizes"].split("-"))
            except ValueError:
                raise SearchError(f"sizes= in {spec!r} must be dash-separated integers") from None
            try:
                g = generators.c5_blowup(sizes)  # validates the shape
            except GraphError as exc:
                raise SearchError(f"bad parameters in {spec!r}: {exc}") from exc
            return iter([(0, encode_graph6(g), None)])
        if family == "enum":
            n = _int_param(params, "n", spec)
            if n > generators.ENUM_CAP:
                raise SearchError(f"enum capped at n = {generators.ENUM_CAP}")
            return (
                (i, encode_graph6(g), None)
                for i, g in enumerate(generators.enumerate_alpha2(n))
            )
        # rand
        n = _int_param(params, "n", spec)
        base_seed = _int_param(params, "seed", spec, default=config.seed)
        count = _int_param(params, "count", spec, default=1)
        density = 0.5
        if "density" in params:
            try:
                density = float(params["density"])
            except ValueError:
                raise SearchError(f"density= in {spec!r} is not a number") from None

        def _rand_stream():
            for i in range(count):
                s = base_seed + i
                try:
                    g = generators.random_alpha2(n, s, density)
                except GraphError as exc:
                    raise SearchError(f"bad parameters in {spec!r}: {exc}") from exc
                yield i, encode_graph6(g), s

        return _rand_stream()

    # otherwise: a graph6 file, one graph per line
    try:
        with open(spec, "r", encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise SearchError(f"cannot read source {spec!r}: {exc}") from exc
    return ((i, line, None) for i, line in enumerate(lines))


def _checker_ids(t: int) -> list[str]:
    ids = ["t1", "t2", "triangle"]
    if t >= 2:
        ids.append("matching")
    if t >= 5:
        ids.append("matching4")
    ids += ["3sets", "omega", "dominating", "gcm"]
    return ids


def evaluate_instance(task: tuple[str, int, Optional[int], SearchConfig]) -> dict:
    """Judge one graph6 line; returns the full record dict.

    Module-level so worker pools can pickle it.
    """
    line, index, inst_seed, cfg = task
    g = parse_graph6(line)
    t = cfg.t
    record: dict = {
        "index": index,
        "graph6": line,
        "n": g.n,
        "t": t,
        "seed": inst_seed,
        "verdict": None,
        "reason": None,
        "cm_lower": None,
        "cm_value": None,
        "cm_exact": None,
        "verifiers": None,
        "work": 0,
    }
    if g.n != 4 * t - 1:
        record["verdict"] = SKIPPED
        record["reason"] = f"vertex count {g.n} != 4t-1 = {4 * t - 1}"
        return record
    if not independence_at_most_2(g):
        record["verdict"] = SKIPPED
        record["reason"] = "alpha > 2"
        return record

    solver_seed = inst_seed if inst_seed is not None else cfg.seed + index
    greedy = greedy_connected_matching(g, seed=solver_seed, restarts=cfg.greedy_restarts)
    record["cm_lower"] = greedy.value
    record["work"] += cfg.greedy_restarts + 1
    if greedy.value >= t:
        record["verdict"] = PASS
        return record

    res = max_connected_matching(g, budget=cfg.exact_budget, target=t)
    record["work"] += res.expansions
    record["cm_value"] = res.value
    record["cm_exact"] = res.exact
    record["cm_lower"] = max(record["cm_lower"], res.value)
    if res.value >= t:
        record["verdict"] = PASS
        return record
    if not res.exact:
        record["verdict"] = INCONCLUSIVE
        record["reason"] = "exact budget exhausted"
        return record

    verdicts = {}
    for lemma in _checker_ids(t):
        rep = run_checker(
            lemma, g, t, res,
            seed=solver_seed, trials=cfg.trials, budget=cfg.exact_budget,
        )
        verdicts[lemma] = rep.verdict
        record["work"] += rep.work
    record["verifiers"] = verdicts
    record["verdict"] = CANDIDATE
    return record


def _record_line(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n"


def _resume_point(out_path: str, cursor_path: str) -> int:
    if not os.path.exists(cursor_path):
        # fresh run: start over, discarding any stale output
        if os.path.exists(out_path):
            os.remove(out_path)
        return 0
    try:
        with open(cursor_path, "r", encoding="ascii") as fh:
            committed = int(fh.read().strip())
    except (OSError, ValueError) as exc:
        raise SearchError(f"corrupt cursor file {cursor_path!r}: {exc}") from exc
    if committed < 0:
        raise SearchError(f"corrupt cursor file {cursor_path!r}: negative count")
    if committed == 0:
        return 0
    try:
        with open(out_path, "r", encoding="ascii") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise SearchError(f"cursor present but output unreadable: {exc}") from exc
    complete = [ln for ln in lines if ln.endswith("\n")]
    if len(complete) < committed:
        raise SearchError(
            f"cursor claims {committed} records but {out_path!r} has {len(complete)}"
        )
    # drop anything past the committed prefix (partial trailing writes)
    if len(lines) != committed:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.writelines(complete[:committed])
    return committed


def run_search(source: str, out_path: str, config: SearchConfig) -> dict:
    """Run the search, appending records to out_path; returns a summary.

    The summary maps each verdict to its count among newly committed records
    and reports the total committed so far (including resumed ones).
    """
    if config.t < 1:
        raise SearchError("t must be positive")
    cursor_path = out_path + ".cursor"
    start = _resume_point(out_path, cursor_path)
    instances = iter_instances(source, config)

    tasks = (
        (line, index, seed, config)
        for index, line, seed in instances
        if index >= start
    )
    counts = {v: 0 for v in VERDICTS}
    emitted = 0
    committed = start
    with open(out_path, "a", encoding="ascii") as out:
        def _commit(record: dict) -> None:
            nonlocal committed, emitted
            out.write(_record_line(record))
            out.flush()
            committed += 1
            with open(cursor_path, "w", encoding="ascii") as cur:
                cur.write(str(committed))
            counts[record["verdict"]] += 1
            emitted += 1

        if config.jobs > 1:
            with Pool(config.jobs) as pool:
                for record in pool.imap(evaluate_instance, tasks, chunksize=1):
                    _commit(record)
                    if config.limit is not None and emitted >= config.limit:
                        break
        else:
            for task in tasks:
                _commit(evaluate_instance(task))
                if config.limit is not None and emitted >= config.limit:
                    break
    return {"committed": committed, "new": emitted, "counts": counts}
