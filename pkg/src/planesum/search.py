"""Grid sweeps hunting for counterexamples, with restart-safe parallelism.

The sweep space is every non-collinear subset of a w x h grid (within size
bounds), reduced to one representative per translation class, paired up with
itself: all unordered pairs (A, B) with A <= B in canonical order. Every
selected check is symmetric in the pair, so each unordered pair is evaluated
once.

Parallel runs stay reproducible by construction rather than by locking:

* each pair has a stable id (the serialized canonical forms), and a hash of
  that id assigns the pair to one of ``workers`` shards;
* each shard writes its records to its own file and checkpoints its progress
  (config fingerprint + records written) atomically, so a killed run resumes
  by truncating to the checkpoint and skipping that many pairs;
* the final report is the sorted merge of all shard files, which makes the
  output bytes independent of worker count and interruption history.

Records are flat ``key=value`` lines. Wall-clock time is tracked in memory
for summaries but kept out of record lines, which must be reproducible.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .conjecture import (
    ConjectureReport,
    check_arc_structure,
    check_boundary_superadditivity,
    check_extremal_classification,
    check_interior_bounds,
    check_pair,
    check_sum_boundary,
    check_unique_rep_bound,
)
from .errors import CapExceeded, ResumeMismatch
from .geometry import (
    HullDecomposition,
    Point,
    PointSet,
    classify_points,
    convex_hull,
    orientation,
)
from .sumset import canonical_translate, minkowski_sum
from .triangulation import lattice_points_in_hull

GRID_CELL_CAP = 25

CHECK_NAMES = (
    "freiman",
    "sum_boundary",
    "boundary_counts",
    "unique_rep",
    "interior",
    "arcs",
    "classification",
)

FILTER_NAMES = ("boundary-only", "interior-both", "unique-rep")

_DIHEDRAL = (
    lambda x, y: (x, y),
    lambda x, y: (-x, y),
    lambda x, y: (x, -y),
    lambda x, y: (-x, -y),
    lambda x, y: (y, x),
    lambda x, y: (-y, x),
    lambda x, y: (y, -x),
    lambda x, y: (-y, -x),
)


def _collinear_points(pts: Sequence[Point]) -> bool:
    if len(pts) <= 2:
        return True
    p0, p1 = pts[0], pts[1]
    return all(orientation(p0, p1, p) == 0 for p in pts[2:])


def _canonical(points: Iterable[Point], symmetry: str) -> PointSet:
    base = canonical_translate(PointSet(points))
    if symmetry == "translation":
        return base
    best = base
    for f in _DIHEDRAL[1:]:
        cand = canonical_translate(PointSet(Point(*f(p.x, p.y)) for p in base))
        if cand < best:
            best = cand
    return best


def enumerate_point_sets(grid_w: int, grid_h: int, min_pts: int, max_pts: int,
                         symmetry: str = "translation") -> Iterator[PointSet]:
    """Canonical non-collinear subsets of the grid, sizes ascending.

    Yields one representative per translation class (or per class of the
    full 8-element lattice symmetry group with ``symmetry="dihedral"``), in
    first-encounter order over ascending subset size and lexicographic
    combinations.
    """
    if grid_w < 1 or grid_h < 1:
        raise ValueError("grid dimensions must be positive")
    if grid_w * grid_h > GRID_CELL_CAP:
        raise CapExceeded(
            f"{grid_w}x{grid_h} grid has {grid_w * grid_h} cells, cap is {GRID_CELL_CAP}"
        )
    if min_pts < 3:
        raise ValueError("min_pts must be at least 3: smaller sets are collinear")
    if max_pts < min_pts:
        raise ValueError("max_pts must be at least min_pts")
    if symmetry not in ("translation", "dihedral"):
        raise ValueError(f"unknown symmetry {symmetry!r}")
    grid = [Point(x, y) for x in range(grid_w) for y in range(grid_h)]
    seen = set()
    for size in range(min_pts, min(max_pts, len(grid)) + 1):
        for combo in itertools.combinations(grid, size):
            if _collinear_points(combo):
                continue
            canon = _canonical(combo, symmetry)
            if canon in seen:
                continue
            seen.add(canon)
            yield canon


def random_point_set(rng: random.Random, grid_w: int, grid_h: int,
                     min_pts: int, max_pts: int) -> PointSet:
    """Uniform random non-collinear grid subset (size uniform in range)."""
    if min_pts < 3:
        raise ValueError("min_pts must be at least 3")
    grid = [Point(x, y) for x in range(grid_w) for y in range(grid_h)]
    while True:
        k = rng.randint(min_pts, min(max_pts, len(grid)))
        pts = rng.sample(grid, k)
        if not _collinear_points(pts):
            return PointSet(pts)


def random_saturated_set(rng: random.Random, span: int = 9,
                         corners: int = 6) -> PointSet:
    """Random lattice-saturated set: all lattice points of a random polygon."""
    while True:
        cand = {Point(rng.randint(0, span), rng.randint(0, span)) for _ in range(corners)}
        if len(cand) < 3:
            continue
        hull = convex_hull(cand)
        if len(hull) >= 3:
            return PointSet(lattice_points_in_hull(hull))


def separated_pair(rng: random.Random) -> Tuple[PointSet, PointSet]:
    """A random pair guaranteed unique representation by scale separation.

    B is a small set dilated by at least ten times the max-coordinate
    diameter of A, so nonzero difference vectors of B are longer than any
    difference of A and no sum point can have two representations.
    """
    a = random_point_set(rng, 5, 5, 3, 6)
    b0 = random_point_set(rng, 4, 4, 3, 6)
    xs = [p.x for p in a]
    ys = [p.y for p in a]
    diam = max(max(xs) - min(xs), max(ys) - min(ys))
    k = 10 * max(1, diam)
    b = PointSet(Point(k * p.x, k * p.y) for p in b0)
    return a, b


@dataclass(frozen=True)
class SearchConfig:
    """Everything that determines a sweep. Hashable into a fingerprint."""

    grid_w: int
    grid_h: int
    min_pts: int = 3
    max_pts: Optional[int] = None
    mode: str = "exhaustive"  # or "random"
    seed: int = 0
    count: int = 0  # random mode: number of drawn pairs
    filters: Tuple[str, ...] = ()
    checks: Tuple[str, ...] = ()
    workers: int = 1
    symmetry: str = "translation"
    report_path: str = "planesum-report.txt"
    checkpoint_path: Optional[str] = None

    def normalized(self) -> "SearchConfig":
        max_pts = self.max_pts if self.max_pts is not None else self.grid_w * self.grid_h
        filters = tuple(sorted(set(self.filters)))
        checks = tuple(c for c in CHECK_NAMES if c in set(self.checks))
        ckpt = self.checkpoint_path or self.report_path + ".ckpt"
        return replace(self, max_pts=max_pts, filters=filters, checks=checks,
                       checkpoint_path=ckpt)

    def validate(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive" and self.grid_w * self.grid_h > GRID_CELL_CAP:
            raise CapExceeded(
                f"exhaustive sweep over {self.grid_w}x{self.grid_h} exceeds "
                f"the {GRID_CELL_CAP}-cell cap"
            )
        if self.mode == "random" and self.count < 1:
            raise ValueError("random mode needs count >= 1")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        for f in self.filters:
            if f not in FILTER_NAMES:
                raise ValueError(f"unknown filter {f!r}, expected one of {FILTER_NAMES}")
        for c in self.checks:
            if c != "main" and c not in CHECK_NAMES:
                raise ValueError(f"unknown check {c!r}, expected one of {CHECK_NAMES}")

    def fingerprint(self) -> str:
        payload = {
            "grid": [self.grid_w, self.grid_h],
            "pts": [self.min_pts, self.max_pts],
            "mode": self.mode,
            "seed": self.seed,
            "count": self.count,
            "filters": list(self.filters),
            "checks": list(self.checks),
            "workers": self.workers,
            "symmetry": self.symmetry,
        }
        blob = json.dumps(payload, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()


@dataclass(frozen=True)
class SearchRecord:
    """One evaluated pair: ids, report, extra check outcomes, wall time."""

    a_id: str
    b_id: str
    report: ConjectureReport
    checks: Dict[str, Optional[bool]]
    walltime: float

    def line(self) -> str:
        r = self.report
        parts = [
            f"a={self.a_id}",
            f"b={self.b_id}",
            f"tr_a={r.tr_a}",
            f"tr_b={r.tr_b}",
            f"tr_ab={r.tr_ab}",
            f"b_a={r.b_a}",
            f"i_a={r.i_a}",
            f"b_b={r.b_b}",
            f"i_b={r.i_b}",
            f"b_ab={r.b_ab}",
            f"i_ab={r.i_ab}",
            f"main={r.main.value}",
            f"strong={_fmt_bool(r.strong_holds)}",
            f"ib={_fmt_bool(r.ib_holds)}",
            f"boundary_form={_fmt_opt(r.boundary_form_holds)}",
            f"case={r.case.value}",
            f"extremal={_fmt_opt(r.extremal)}",
        ]
        for name in CHECK_NAMES:
            if name in self.checks:
                val = self.checks[name]
                parts.append(f"{name}={'skip' if val is None else _fmt_bool(val)}")
        return " ".join(parts)


def _fmt_bool(v: bool) -> str:
    return "true" if v else "false"


def _fmt_opt(v: Optional[bool]) -> str:
    if v is None:
        return "none"
    return "holds" if v else "fails"


def serialize_set_id(s: PointSet) -> str:
    return ";".join(f"{p.x},{p.y}" for p in s)


def _shard_of(pair_id: str, workers: int) -> int:
    digest = hashlib.sha256(pair_id.encode()).digest()
    return int.from_bytes(digest[:8], "big") % workers


def _pair_stream(cfg: SearchConfig) -> Iterator[Tuple[PointSet, PointSet]]:
    if cfg.mode == "exhaustive":
        sets = sorted(enumerate_point_sets(
            cfg.grid_w, cfg.grid_h, cfg.min_pts, cfg.max_pts, cfg.symmetry))
        for i in range(len(sets)):
            for j in range(i, len(sets)):
                yield sets[i], sets[j]
    else:
        rng = random.Random(cfg.seed)
        for _ in range(cfg.count):
            a = _canonical(random_point_set(rng, cfg.grid_w, cfg.grid_h,
                                            cfg.min_pts, cfg.max_pts), cfg.symmetry)
            b = _canonical(random_point_set(rng, cfg.grid_w, cfg.grid_h,
                                            cfg.min_pts, cfg.max_pts), cfg.symmetry)
            if b < a:
                a, b = b, a
            yield a, b


def _passes_set_filters(cfg: SearchConfig, da: HullDecomposition,
                        db: HullDecomposition) -> bool:
    # filters decidable from the two summands alone, checked before the
    # (much more expensive) sumset decomposition is computed
    for f in cfg.filters:
        if f == "boundary-only":
            if da.i != 0 or db.i != 0:
                return False
        elif f == "interior-both":
            if da.i < 1 or db.i < 1:
                return False
    return True


def _passes_sum_filters(cfg: SearchConfig, a: PointSet, b: PointSet,
                        dab: HullDecomposition) -> bool:
    for f in cfg.filters:
        if f == "unique-rep":
            if len(dab.points) != len(a) * len(b):
                return False
    return True


def _evaluate_checks(cfg: SearchConfig, a: PointSet, b: PointSet,
                     da: HullDecomposition, db: HullDecomposition,
                     dab: HullDecomposition) -> Dict[str, Optional[bool]]:
    out: Dict[str, Optional[bool]] = {}
    boundary_only = da.i == 0 and db.i == 0
    unique = len(dab.points) == len(a) * len(b)
    for name in cfg.checks:
        if name == "freiman":
            out[name] = len(dab.points) >= len(a) + len(b) - 1
        elif name == "sum_boundary":
            out[name] = check_sum_boundary(a, b, da, db, dab)
        elif name == "boundary_counts":
            out[name] = check_boundary_superadditivity(a, b, da, db, dab).ok
        elif name == "unique_rep":
            out[name] = check_unique_rep_bound(a, b, da, db, dab) if unique else None
        elif name == "interior":
            applies = da.i >= 1 and db.i >= 1
            out[name] = check_interior_bounds(a, b, da, db, dab) if applies else None
        elif name == "arcs":
            if boundary_only:
                out[name] = check_arc_structure(
                    a, b, decomp_a=da, decomp_b=db, decomp_ab=dab).ok
            else:
                out[name] = None
        elif name == "classification":
            if boundary_only:
                out[name] = check_extremal_classification(a, b, da, db, dab)
            else:
                out[name] = None
    return out


def _shard_paths(cfg: SearchConfig, shard: int) -> Tuple[str, str]:
    base = f"{cfg.checkpoint_path}.shard{shard:03d}"
    return base + ".records", base + ".json"


def _atomic_write(path: str, data: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(data)
    os.replace(tmp, path)


def _load_shard_state(state_path: str, fingerprint: str) -> Optional[dict]:
    if not os.path.exists(state_path):
        return None
    with open(state_path, "r", encoding="utf-8") as fh:
        state = json.load(fh)
    if state.get("config") != fingerprint:
        raise ResumeMismatch(
            f"checkpoint {state_path} was written by a different configuration"
        )
    return state


_CHECKPOINT_EVERY = 512


def run_shard(cfg_kwargs: dict, shard: int) -> int:
    """Evaluate one shard's pairs, appending records and checkpointing.

    Returns the number of records in the completed shard file. Safe to call
    again after a crash: the checkpoint stores how many of the shard's pairs
    were fully handled (``visited``) and how many record lines those produced
    (``records``, smaller when filters drop pairs); resuming truncates the
    record file to that many lines and skips that many pairs.
    """
    cfg = SearchConfig(**cfg_kwargs)
    fingerprint = cfg.fingerprint()
    records_path, state_path = _shard_paths(cfg, shard)
    state = _load_shard_state(state_path, fingerprint)
    visited_done = 0
    records_done = 0
    if state is not None and os.path.exists(records_path):
        if state.get("complete"):
            return int(state["records"])
        visited_done = int(state.get("visited", 0))
        records_done = int(state.get("records", 0))
    if records_done:
        with open(records_path, "r", encoding="utf-8") as fh:
            kept = list(itertools.islice(fh, records_done))
        if len(kept) < records_done:
            # checkpoint ahead of the file: fall back to a fresh shard
            visited_done = records_done = 0
            kept = []
        with open(records_path, "w", encoding="utf-8") as fh:
            fh.writelines(kept)
    else:
        open(records_path, "w", encoding="utf-8").close()

    decomp_cache: Dict[PointSet, HullDecomposition] = {}

    def decomp(s: PointSet) -> HullDecomposition:
        d = decomp_cache.get(s)
        if d is None:
            d = classify_points(s)
            decomp_cache[s] = d
        return d

    visited = 0
    records = records_done
    with open(records_path, "a", encoding="utf-8") as out:
        for a, b in _pair_stream(cfg):
            a_id = serialize_set_id(a)
            b_id = serialize_set_id(b)
            pair_id = f"{a_id}|{b_id}"
            if _shard_of(pair_id, cfg.workers) != shard:
                continue
            visited += 1
            if visited <= visited_done:
                continue
            t0 = time.perf_counter()
            da = decomp(a)
            db = decomp(b)
            if _passes_set_filters(cfg, da, db):
                dab = classify_points(minkowski_sum(a, b))
                if _passes_sum_filters(cfg, a, b, dab):
                    report = check_pair(a, b, da, db, dab)
                    checks = _evaluate_checks(cfg, a, b, da, db, dab)
                    rec = SearchRecord(a_id=a_id, b_id=b_id, report=report,
                                       checks=checks,
                                       walltime=time.perf_counter() - t0)
                    out.write(rec.line() + "\n")
                    records += 1
            if visited > visited_done and visited % _CHECKPOINT_EVERY == 0:
                out.flush()
                _atomic_write(state_path, json.dumps({
                    "config": fingerprint, "visited": visited,
                    "records": records, "complete": False,
                }))
        out.flush()
    _atomic_write(state_path, json.dumps({
        "config": fingerprint, "visited": visited, "records": records,
        "complete": True,
    }))
    return records


@dataclass
class SearchSummary:
    """Merged outcome of a sweep."""

    pairs: int
    verdicts: Dict[str, int]
    fails: List[str] = field(default_factory=list)
    check_failures: List[str] = field(default_factory=list)
    elapsed: float = 0.0
    report_path: str = ""

    @property
    def clean(self) -> bool:
        return not self.fails and not self.check_failures


def _summarize_lines(lines: Sequence[str]) -> Tuple[Dict[str, int], List[str], List[str]]:
    verdicts = {"StrictHolds": 0, "Equality": 0, "Fails": 0}
    fails: List[str] = []
    check_failures: List[str] = []
    check_keys = set(CHECK_NAMES)
    for line in lines:
        kv = dict(tok.split("=", 1) for tok in line.split())
        verdicts[kv["main"]] += 1
        if kv["main"] == "Fails":
            fails.append(line)
        if any(kv.get(k) == "false" for k in check_keys):
            check_failures.append(line)
    return verdicts, fails, check_failures


def run_search(cfg: SearchConfig) -> SearchSummary:
    """Run a sweep to completion and write the sorted merged report."""
    cfg.validate()  # before normalized(), which drops unknown check names
    cfg = cfg.normalized()
    fingerprint = cfg.fingerprint()
    t0 = time.perf_counter()

    # surface a stale checkpoint before spawning anything
    for shard in range(cfg.workers):
        _, state_path = _shard_paths(cfg, shard)
        _load_shard_state(state_path, fingerprint)

    cfg_kwargs = {
        "grid_w": cfg.grid_w, "grid_h": cfg.grid_h, "min_pts": cfg.min_pts,
        "max_pts": cfg.max_pts, "mode": cfg.mode, "seed": cfg.seed,
        "count": cfg.count, "filters": cfg.filters, "checks": cfg.checks,
        "workers": cfg.workers, "symmetry": cfg.symmetry,
        "report_path": cfg.report_path, "checkpoint_path": cfg.checkpoint_path,
    }
    if cfg.workers == 1:
        run_shard(cfg_kwargs, 0)
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(run_shard, cfg_kwargs, k) for k in range(cfg.workers)]
            for fut in futures:
                fut.result()

    lines: List[str] = []
    for shard in range(cfg.workers):
        records_path, _ = _shard_paths(cfg, shard)
        with open(records_path, "r", encoding="utf-8") as fh:
            lines.extend(line.rstrip("\n") for line in fh if line.strip())
    lines.sort()
    _atomic_write(cfg.report_path, "".join(line + "\n" for line in lines))

    for shard in range(cfg.workers):
        records_path, state_path = _shard_paths(cfg, shard)
        for path in (records_path, state_path):
            if os.path.exists(path):
                os.remove(path)

    verdicts, fails, check_failures = _summarize_lines(lines)
    return SearchSummary(
        pairs=len(lines), verdicts=verdicts, fails=fails,
        check_failures=check_failures, elapsed=time.perf_counter() - t0,
        report_path=cfg.report_path,
    )
