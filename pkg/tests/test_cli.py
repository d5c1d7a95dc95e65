import json

import pytest

from queerdual.cli import main


def run(args, tmp_path, name="report.json"):
    path = tmp_path / name
    code = main(args + ["--report", str(path)])
    return code, json.loads(path.read_text())


def test_relations_suite(tmp_path):
    code, payload = run(["relations", "--n", "1", "--m", "2"], tmp_path)
    assert code == 0
    assert payload["suite"] == "relations"
    assert all(c["status"] == "pass" for c in payload["checks"])


def test_sergeev_suite_with_regressions(tmp_path):
    code, payload = run(["sergeev", "--n", "1", "--m", "1"], tmp_path)
    assert code == 0
    names = [c["name"] for c in payload["checks"]]
    assert any(name.startswith("regression[") for name in names)


def test_fixture_suite(tmp_path):
    code, payload = run(["fixture"], tmp_path)
    assert code == 0
    assert any(c["name"].startswith("braid_eigenvalue") for c in payload["checks"])


def test_howe_suite(tmp_path):
    code, payload = run(["howe", "--n", "1", "--m", "1", "--degree", "1"], tmp_path)
    assert code == 0
    dims = payload["derived_values"]["dims_by_degree"]
    assert dims["1"]["dim"] == 2 and dims["1"]["predicted"] == 2


def test_census_suite(tmp_path):
    code, payload = run(["census", "--n", "1", "--m", "2"], tmp_path)
    assert code == 0


def test_coord_suite(tmp_path):
    code, payload = run(["coord", "--n", "1", "--m", "1"], tmp_path)
    assert code == 0


def test_invalid_config():
    assert main(["relations", "--n", "0"]) == 2
    assert main(["relations", "--mode", "prob", "--trials", "0"]) == 2


def test_unsupported_scale():
    assert main(["relations", "--n", "9"]) == 2
    assert main(["howe", "--degree", "7"]) == 2


def test_cache_round_trip(tmp_path):
    cache = tmp_path / "cache"
    code1, p1 = run(["relations", "--n", "1", "--m", "2", "--cache", str(cache)], tmp_path, "a.json")
    assert code1 == 0 and list(cache.iterdir())
    code2, p2 = run(["relations", "--n", "1", "--m", "2", "--cache", str(cache)], tmp_path, "b.json")
    p1.pop("elapsed_ms")
    p2.pop("elapsed_ms")
    assert p1 == p2
    # cache deletion changes nothing but timing
    for f in cache.iterdir():
        f.unlink()
    code3, p3 = run(["relations", "--n", "1", "--m", "2"], tmp_path, "c.json")
    p3.pop("elapsed_ms")
    assert p3 == p1


def test_probabilistic_mode(tmp_path):
    code, payload = run(
        ["relations", "--n", "2", "--m", "2", "--mode", "prob", "--trials", "2", "--seed", "3"],
        tmp_path,
    )
    assert code == 0
    assert payload["params"]["mode"] == "prob"


def test_failing_exit_status(tmp_path, monkeypatch):
    # a deliberately broken suite must exit nonzero
    import queerdual.cli as cli

    def broken(cfg):
        from queerdual.report import VerifyReport

        rep = VerifyReport("hc", {"n": cfg.n, "m": cfg.m})
        rep.add("planted", False, witness="broken")
        return rep.finish()

    monkeypatch.setitem(cli.SUITES, "hc", broken)
    path = str(tmp_path / "fail.json")
    assert main(["hc", "--report", path]) == 1
