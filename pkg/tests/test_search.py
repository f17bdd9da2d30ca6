import itertools
import json
import random
from dataclasses import asdict, replace

import pytest

import planesum.search as search_mod
from planesum import (
    CapExceeded,
    PointSet,
    ResumeMismatch,
    SearchConfig,
    SearchRecord,
    check_pair,
    classify_points,
    enumerate_point_sets,
    is_lattice_saturated,
    random_point_set,
    random_saturated_set,
    run_search,
    separated_pair,
    unique_representation,
)
from planesum.search import run_shard, serialize_set_id
from planesum.sumset import canonical_translate

TRI = PointSet([(0, 0), (1, 0), (0, 1)])


class TestEnumeration:
    def test_two_by_two_classes(self):
        got = list(enumerate_point_sets(2, 2, 3, 4))
        assert got == [
            PointSet([(0, 0), (0, 1), (1, 0)]),
            PointSet([(0, 0), (0, 1), (1, 1)]),
            PointSet([(0, 0), (1, 0), (1, 1)]),
            PointSet([(0, 0), (1, -1), (1, 0)]),
            PointSet([(0, 0), (0, 1), (1, 0), (1, 1)]),
        ]

    def test_canonical_form_may_leave_the_grid(self):
        # the class of {(0,1),(1,0),(1,1)} canonicalizes to a set with y = -1
        got = list(enumerate_point_sets(2, 2, 3, 4))
        assert PointSet([(0, 0), (1, -1), (1, 0)]) in got

    def test_three_by_three_count_matches_brute_force(self):
        got = list(enumerate_point_sets(3, 3, 3, 9))
        grid = [(x, y) for x in range(3) for y in range(3)]
        classes = set()
        total_subsets = 0
        for size in range(3, 10):
            for combo in itertools.combinations(grid, size):
                try:
                    classify_points(combo)
                except Exception:
                    continue
                total_subsets += 1
                classes.add(canonical_translate(PointSet(combo)))
        assert total_subsets == 458
        assert len(classes) == len(got) == 383
        assert classes == set(got)

    def test_collinear_only_grid_is_empty(self):
        assert list(enumerate_point_sets(3, 1, 3, 3)) == []

    def test_dihedral_symmetry_collapses_classes(self):
        got = list(enumerate_point_sets(2, 2, 3, 4, symmetry="dihedral"))
        assert len(got) == 2  # one triangle class, one full-square class

    def test_size_bounds_respected(self):
        got = list(enumerate_point_sets(3, 3, 4, 4))
        assert all(len(s) == 4 for s in got)

    def test_min_pts_validation(self):
        with pytest.raises(ValueError):
            list(enumerate_point_sets(3, 3, 2, 4))

    def test_cell_cap(self):
        with pytest.raises(CapExceeded):
            list(enumerate_point_sets(6, 5, 3, 4))


class TestRandomGenerators:
    def test_random_point_set_is_valid(self):
        rng = random.Random(7)
        for _ in range(50):
            s = random_point_set(rng, 8, 8, 3, 10)
            assert 3 <= len(s) <= 10
            assert all(0 <= p.x < 8 and 0 <= p.y < 8 for p in s)
            classify_points(s)  # must not raise

    def test_random_saturated_set(self):
        rng = random.Random(11)
        for _ in range(20):
            s = random_saturated_set(rng)
            assert is_lattice_saturated(s)

    def test_separated_pair_has_unique_representation(self):
        rng = random.Random(3)
        for _ in range(25):
            a, b = separated_pair(rng)
            ok, witness = unique_representation(a, b)
            assert ok, witness

    def test_seeded_reproducibility(self):
        s1 = random_point_set(random.Random(42), 8, 8, 3, 10)
        s2 = random_point_set(random.Random(42), 8, 8, 3, 10)
        assert s1 == s2


class TestSearchConfig:
    def test_normalized_defaults(self):
        cfg = SearchConfig(grid_w=3, grid_h=3, checks=("sum_boundary", "freiman"),
                           report_path="r.txt").normalized()
        assert cfg.max_pts == 9
        assert cfg.checks == ("freiman", "sum_boundary")  # canonical order
        assert cfg.checkpoint_path == "r.txt.ckpt"

    def test_validate_rejects_bad_mode(self):
        with pytest.raises(ValueError):
            SearchConfig(grid_w=3, grid_h=3, mode="stochastic").validate()

    def test_validate_rejects_bad_filter(self):
        with pytest.raises(ValueError):
            SearchConfig(grid_w=3, grid_h=3, filters=("tiny",)).validate()

    def test_validate_rejects_bad_check(self):
        with pytest.raises(ValueError):
            SearchConfig(grid_w=3, grid_h=3, checks=("vibes",)).validate()

    def test_validate_rejects_random_without_count(self):
        with pytest.raises(ValueError):
            SearchConfig(grid_w=3, grid_h=3, mode="random").validate()

    def test_exhaustive_cap(self):
        with pytest.raises(CapExceeded):
            SearchConfig(grid_w=6, grid_h=6).validate()

    def test_fingerprint_ignores_paths(self):
        c1 = SearchConfig(grid_w=3, grid_h=3, report_path="a.txt").normalized()
        c2 = SearchConfig(grid_w=3, grid_h=3, report_path="b.txt",
                          checkpoint_path="elsewhere.ckpt").normalized()
        assert c1.fingerprint() == c2.fingerprint()

    def test_fingerprint_tracks_workers_and_seed(self):
        base = SearchConfig(grid_w=3, grid_h=3).normalized()
        assert base.fingerprint() != replace(base, workers=4).fingerprint()
        assert base.fingerprint() != replace(base, seed=1).fingerprint()


class TestRecordLine:
    def test_frozen_format(self):
        report = check_pair(TRI, TRI)
        rec = SearchRecord(
            a_id=serialize_set_id(TRI), b_id=serialize_set_id(TRI),
            report=report, checks={"freiman": True, "arcs": None},
            walltime=123.456,
        )
        assert rec.line() == (
            "a=0,0;0,1;1,0 b=0,0;0,1;1,0 "
            "tr_a=1 tr_b=1 tr_ab=4 "
            "b_a=3 i_a=0 b_b=3 i_b=0 b_ab=6 i_ab=0 "
            "main=Equality strong=true ib=true boundary_form=holds "
            "case=BoundaryOnly extremal=none freiman=true arcs=skip"
        )

    def test_walltime_never_leaks_into_lines(self):
        report = check_pair(TRI, TRI)
        rec = SearchRecord(a_id="x", b_id="y", report=report, checks={},
                           walltime=9.87)
        assert "walltime" not in rec.line()
        assert "9.87" not in rec.line()


class TestSummarize:
    def test_counts_fails_and_check_failures(self):
        lines = [
            "a=p b=q main=StrictHolds freiman=true",
            "a=p b=r main=Fails freiman=true",
            "a=q b=r main=Equality freiman=false arcs=skip",
        ]
        verdicts, fails, check_failures = search_mod._summarize_lines(lines)
        assert verdicts == {"StrictHolds": 1, "Equality": 1, "Fails": 1}
        assert fails == [lines[1]]
        assert check_failures == [lines[2]]


def _cfg_kwargs(cfg: SearchConfig) -> dict:
    return asdict(cfg.normalized())


class TestRunShard:
    def test_complete_shard_short_circuits(self, tmp_path, monkeypatch):
        cfg = SearchConfig(grid_w=2, grid_h=2, checks=("freiman",),
                           report_path=str(tmp_path / "r.txt"))
        kwargs = _cfg_kwargs(cfg)
        n = run_shard(kwargs, 0)
        assert n == 15  # 5 classes -> C(5,2) + 5 diagonal pairs

        def boom(*args, **kw):
            raise AssertionError("should not recompute a complete shard")

        monkeypatch.setattr(search_mod, "check_pair", boom)
        assert run_shard(kwargs, 0) == 15

    def test_resume_mismatch_detected(self, tmp_path):
        cfg = SearchConfig(grid_w=2, grid_h=2, report_path=str(tmp_path / "r.txt"))
        kwargs = _cfg_kwargs(cfg)
        norm = SearchConfig(**kwargs)
        _, state_path = search_mod._shard_paths(norm, 0)
        with open(state_path, "w") as fh:
            json.dump({"config": "deadbeef", "visited": 3, "records": 3,
                       "complete": False}, fh)
        with pytest.raises(ResumeMismatch):
            run_shard(kwargs, 0)

    def _crash_then_resume(self, tmp_path, monkeypatch, ref_cfg, crash_after,
                           checkpoint_every):
        """Run once clean, once with an injected crash, resume, compare bytes."""
        ref_kwargs = _cfg_kwargs(ref_cfg)
        n_ref = run_shard(ref_kwargs, 0)
        ref_records, _ = search_mod._shard_paths(SearchConfig(**ref_kwargs), 0)
        with open(ref_records) as fh:
            ref_bytes = fh.read()

        cfg = replace(ref_cfg, report_path=str(tmp_path / "crash.txt"))
        kwargs = _cfg_kwargs(cfg)
        monkeypatch.setattr(search_mod, "_CHECKPOINT_EVERY", checkpoint_every)
        real = search_mod.check_pair
        calls = {"n": 0}

        def flaky(*args, **kw):
            calls["n"] += 1
            if calls["n"] > crash_after:
                raise RuntimeError("injected crash")
            return real(*args, **kw)

        monkeypatch.setattr(search_mod, "check_pair", flaky)
        with pytest.raises(RuntimeError):
            run_shard(kwargs, 0)

        records_path, state_path = search_mod._shard_paths(SearchConfig(**kwargs), 0)
        with open(state_path) as fh:
            state = json.load(fh)
        assert not state["complete"]
        assert 0 < state["visited"] < kwargs["count"]
        assert state["records"] <= state["visited"]

        monkeypatch.setattr(search_mod, "check_pair", real)
        n_resumed = run_shard(kwargs, 0)
        assert n_resumed == n_ref
        with open(records_path) as fh:
            assert fh.read() == ref_bytes
        return state

    def test_crash_and_resume_reproduces_uninterrupted_run(self, tmp_path, monkeypatch):
        ref = SearchConfig(grid_w=4, grid_h=4, mode="random", seed=9, count=120,
                           min_pts=3, max_pts=6, checks=("freiman",),
                           report_path=str(tmp_path / "ref.txt"))
        state = self._crash_then_resume(tmp_path, monkeypatch, ref,
                                        crash_after=30, checkpoint_every=7)
        assert state["records"] == state["visited"]  # no filters drop pairs

    def test_crash_and_resume_with_filters(self, tmp_path, monkeypatch):
        # filters make records lag visited; resume must honor both counters
        ref = SearchConfig(grid_w=4, grid_h=4, mode="random", seed=2, count=150,
                           min_pts=3, max_pts=6, checks=("arcs",),
                           filters=("boundary-only",),
                           report_path=str(tmp_path / "ref.txt"))
        state = self._crash_then_resume(tmp_path, monkeypatch, ref,
                                        crash_after=40, checkpoint_every=7)
        assert state["records"] < state["visited"]


class TestRunSearch:
    def test_exhaustive_two_by_two_all_checks(self, tmp_path):
        cfg = SearchConfig(grid_w=2, grid_h=2, checks=search_mod.CHECK_NAMES,
                           report_path=str(tmp_path / "report.txt"))
        summary = run_search(cfg)
        assert summary.pairs == 15
        assert sum(summary.verdicts.values()) == 15
        assert summary.verdicts["Fails"] == 0
        assert summary.clean
        with open(summary.report_path) as fh:
            lines = fh.read().splitlines()
        assert len(lines) == 15
        assert lines == sorted(lines)
        for line in lines:
            assert " main=" in line and " freiman=" in line

    def test_shard_files_cleaned_up(self, tmp_path):
        cfg = SearchConfig(grid_w=2, grid_h=2, workers=2,
                           report_path=str(tmp_path / "report.txt"))
        run_search(cfg)
        leftovers = [p.name for p in tmp_path.iterdir() if "shard" in p.name]
        assert leftovers == []

    def test_worker_count_does_not_change_bytes(self, tmp_path):
        lone = SearchConfig(grid_w=2, grid_h=2, checks=("freiman", "arcs"),
                            report_path=str(tmp_path / "w1.txt"))
        multi = replace(lone, workers=3, report_path=str(tmp_path / "w3.txt"))
        s1 = run_search(lone)
        s3 = run_search(multi)
        with open(s1.report_path, "rb") as fh:
            b1 = fh.read()
        with open(s3.report_path, "rb") as fh:
            b3 = fh.read()
        assert b1 == b3
        assert s1.pairs == s3.pairs == 15

    def test_random_mode_is_seed_deterministic(self, tmp_path):
        base = SearchConfig(grid_w=4, grid_h=4, mode="random", seed=5, count=20,
                            checks=("freiman",),
                            report_path=str(tmp_path / "rand1.txt"))
        again = replace(base, report_path=str(tmp_path / "rand2.txt"))
        s1 = run_search(base)
        s2 = run_search(again)
        assert s1.pairs == s2.pairs == 20
        with open(s1.report_path, "rb") as fh:
            b1 = fh.read()
        with open(s2.report_path, "rb") as fh:
            b2 = fh.read()
        assert b1 == b2

    def test_filters_restrict_records(self, tmp_path):
        cfg = SearchConfig(grid_w=3, grid_h=3, max_pts=4,
                           filters=("interior-both",),
                           report_path=str(tmp_path / "f.txt"))
        summary = run_search(cfg)
        with open(summary.report_path) as fh:
            lines = fh.read().splitlines()
        assert summary.pairs == len(lines)
        for line in lines:
            kv = dict(tok.split("=", 1) for tok in line.split())
            assert int(kv["i_a"]) >= 1 and int(kv["i_b"]) >= 1

    def test_stale_checkpoint_rejected_before_work(self, tmp_path):
        cfg = SearchConfig(grid_w=2, grid_h=2,
                           report_path=str(tmp_path / "r.txt")).normalized()
        _, state_path = search_mod._shard_paths(cfg, 0)
        with open(state_path, "w") as fh:
            json.dump({"config": "stale", "visited": 1, "records": 1,
                       "complete": False}, fh)
        with pytest.raises(ResumeMismatch):
            run_search(cfg)
