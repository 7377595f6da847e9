import json

import pytest

from cgobstruct import (
    RANKINGS,
    SearchConfig,
    enumerate_candidates,
    parse_config_file,
    search,
)

FLAGSHIP_POOLS = dict(p_primes=(83, 103), q_primes=(11, 13, 17))


def test_candidate_enumeration_order():
    cfg = SearchConfig(**FLAGSHIP_POOLS)
    cands = list(enumerate_candidates(cfg))
    assert cands == [
        (83, 103, 11, 13, 17),
        (83, 103, 13, 11, 17),
        (83, 103, 17, 11, 13),
    ]


def test_candidate_algebraic_filter():
    cfg = SearchConfig(p_primes=(61, 83), q_primes=(11, 13, 17))
    assert list(enumerate_candidates(cfg)) == []  # 61 <= 4*17
    loose = SearchConfig(
        p_primes=(61, 83), q_primes=(11, 13, 17), require_algebraic=False
    )
    assert len(list(enumerate_candidates(loose))) == 3


def test_candidate_pools_must_be_disjoint_per_tuple():
    cfg = SearchConfig(p_primes=(13, 83), q_primes=(11, 13, 17), require_algebraic=False)
    assert list(enumerate_candidates(cfg)) == []


def test_ranking_keys():
    t = (83, 103, 17, 11, 13)
    assert RANKINGS["product"](t) == (83 * 103, t)
    assert RANKINGS["lex"](t) == t
    assert RANKINGS["maxprime"](t) == (103, t)


def test_flagship_sweep_keeps_exactly_one(tmp_path):
    ckpt = tmp_path / "sweep.jsonl"
    cfg = SearchConfig(kernel="numpy", **FLAGSHIP_POOLS)
    kept = search(cfg, checkpoint=str(ckpt))
    assert [r["tuple"] for r in kept] == [[83, 103, 17, 11, 13]]
    assert kept[0]["report"]["genus"]["lower_bound"] == 2
    assert kept[0]["report"]["conclusion"] == "g₄^top = g₄ = 2"
    # the other two slot assignments of the same q-set fail
    records = [json.loads(line) for line in ckpt.read_text().splitlines()]
    assert [r["tuple"] for r in records] == [
        [83, 103, 11, 13, 17],
        [83, 103, 13, 11, 17],
        [83, 103, 17, 11, 13],
    ]
    assert [r["kept"] for r in records] == [False, False, True]
    assert records[0]["lower_bound"] == 0
    assert records[1]["lower_bound"] == 0
    for r in records:
        assert set(r["margins"]) == {"83", "103"}
    assert records[2]["margins"] == {"83": "7/1", "103": "7/1"}


def test_second_example_sweep():
    cfg = SearchConfig(p_primes=(107, 131), q_primes=(17, 19, 23), kernel="numpy")
    kept = search(cfg)
    assert [r["tuple"] for r in kept] == [[107, 131, 23, 17, 19]]


def test_genus_two_sweep_is_empty():
    cfg = SearchConfig(genus=2, kernel="numpy", **FLAGSHIP_POOLS)
    assert search(cfg) == []


def test_checkpoint_resume_matches_uninterrupted(tmp_path):
    cfg = SearchConfig(kernel="numpy", **FLAGSHIP_POOLS)
    full_ckpt = tmp_path / "full.jsonl"
    full = search(cfg, checkpoint=str(full_ckpt))
    lines = full_ckpt.read_text().splitlines()
    assert len(lines) == 3

    partial = tmp_path / "partial.jsonl"
    partial.write_text("\n".join(lines[:2]) + "\n")
    resumed = search(cfg, checkpoint=str(partial))
    assert json.dumps(resumed, sort_keys=True) == json.dumps(full, sort_keys=True)
    assert len(partial.read_text().splitlines()) == 3


def test_search_threads_agree():
    one = search(SearchConfig(kernel="numpy", threads=1, **FLAGSHIP_POOLS))
    two = search(SearchConfig(kernel="numpy", threads=2, **FLAGSHIP_POOLS))
    assert json.dumps(one, sort_keys=True) == json.dumps(two, sort_keys=True)


def test_search_records_errors_and_continues(tmp_path, monkeypatch):
    import sys

    search_mod = sys.modules["cgobstruct.search"]

    def boom(K, **kwargs):
        raise RuntimeError("synthetic failure")

    monkeypatch.setattr(search_mod, "genus_lower_bound", boom)
    ckpt = tmp_path / "err.jsonl"
    kept = search(SearchConfig(**FLAGSHIP_POOLS), checkpoint=str(ckpt))
    assert kept == []
    records = [json.loads(line) for line in ckpt.read_text().splitlines()]
    assert len(records) == 3
    assert all("synthetic failure" in r["error"] for r in records)


def test_search_limit():
    cfg = SearchConfig(kernel="numpy", limit=1, **FLAGSHIP_POOLS)
    assert len(search(cfg)) == 1


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(p_primes=(9, 83), q_primes=(11,))
    with pytest.raises(ValueError):
        SearchConfig(p_primes=(83,), q_primes=(2,))
    with pytest.raises(ValueError):
        SearchConfig(p_primes=(83,), q_primes=(11,), ranking="nope")
    with pytest.raises(ValueError):
        SearchConfig(p_primes=(83,), q_primes=(11,), genus=0)
    cfg = SearchConfig(p_primes=(103, 83, 83), q_primes=(17, 11, 13))
    assert cfg.p_primes == (83, 103)
    assert cfg.q_primes == (11, 13, 17)


def test_from_bounds():
    cfg = SearchConfig.from_bounds(80, 110, 10, 20)
    assert cfg.p_primes == (83, 89, 97, 101, 103, 107, 109)
    assert cfg.q_primes == (11, 13, 17, 19)


def test_parse_config_file(tmp_path):
    path = tmp_path / "sweep.cfg"
    path.write_text(
        "# flagship sweep\n"
        "p_set = 83,103\n"
        "q_min = 10\n"
        "q_max = 18\n"
        "genus = 1\n"
        "ranking = maxprime\n"
        "limit = 5\n"
        "threads = 2\n"
        "require_algebraic = false\n"
    )
    parsed = parse_config_file(str(path))
    assert parsed == {
        "p_primes": (83, 103),
        "q_primes": (11, 13, 17),
        "genus": 1,
        "ranking": "maxprime",
        "limit": 5,
        "threads": 2,
        "require_algebraic": False,
    }
    SearchConfig(**parsed)


def test_parse_config_file_rejects_garbage(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("p_set 83,103\n")
    with pytest.raises(ValueError, match="bad.cfg:1"):
        parse_config_file(str(path))
