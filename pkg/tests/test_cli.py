import json

import pytest

from foulkeshowe.cache import CACHE_ENV_VAR, block_partitions_cached, character_table_cached
from foulkeshowe.cli import main
from foulkeshowe.combinatorics import character_table, enumerate_block_partitions


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_psi_command(capsys):
    code, result = run(capsys, "psi", "--a", "2", "--b", "2", "--certify")
    assert code == 0
    assert result["domain_dim"] == 3
    assert result["codomain_dim"] == 3
    assert result["rank"] == 3
    assert result["injective"] is True


def test_psi_trivial_case(capsys):
    code, result = run(capsys, "psi", "--a", "1", "--b", "5", "--certify")
    assert code == 0
    assert result["rank"] == 1 and result["injective"]


def test_psi_fused_flag_same_math(capsys):
    _, plain = run(capsys, "psi", "--a", "2", "--b", "3", "--certify")
    _, fused = run(capsys, "psi", "--a", "2", "--b", "3", "--fused", "--certify")
    for key in ("domain_dim", "codomain_dim", "rank", "injective"):
        assert plain[key] == fused[key]


def test_psi_export(capsys, tmp_path):
    path = tmp_path / "m.fhm1"
    code, result = run(capsys, "psi", "--a", "2", "--b", "2", "--export", str(path))
    assert code == 0
    assert result["artifacts"]["matrix"] == str(path)
    text1 = path.read_text()
    run(capsys, "psi", "--a", "2", "--b", "2", "--export", str(path))
    assert path.read_text() == text1  # byte-identical re-export


def test_psi_resource_limit(capsys):
    assert main(["psi", "--a", "9", "--b", "9"]) == 3
    capsys.readouterr()


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["psi", "--a", "2"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["mult", "--a", "2", "--b", "2", "--lambda", "1,2"])
    assert err.value.code == 2
    capsys.readouterr()


def test_mult_command(capsys):
    code, result = run(capsys, "mult", "--a", "3", "--b", "2", "--lambda", "2,2,2")
    assert code == 0
    assert result["multiplicity"] == 1
    code, result = run(capsys, "mult", "--a", "2", "--b", "2")
    assert result["table"] == {"4": 1, "2,2": 1}
    assert result["dimension_check"] == 3


def test_foulkes_and_hermite_commands(capsys):
    code, result = run(capsys, "foulkes", "--a", "2", "--b", "2")
    assert code == 0
    assert result["ok"] and all(x == y for x, y in result["table"].values())
    code, result = run(capsys, "hermite", "--a", "2", "--b", "4")
    assert code == 0 and result["ok"]


def test_verify_command(capsys):
    code, result = run(capsys, "verify", "--claims", "wedge", "--max-ab", "6")
    assert code == 0
    assert result["ok"] and result["reports"]["wedge"]["ok"]


def test_json_math_fields_deterministic(capsys):
    _, one = run(capsys, "foulkes", "--a", "2", "--b", "3")
    _, two = run(capsys, "foulkes", "--a", "2", "--b", "3")
    one.pop("timing")
    two.pop("timing")
    assert one == two


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path))
    table = character_table_cached(4)
    assert table == character_table(4)
    # second call reads from disk
    assert character_table_cached(4) == table
    assert any(p.name.startswith("v1-chartable-4") for p in tmp_path.iterdir())
    parts = block_partitions_cached(2, 3)
    assert parts == enumerate_block_partitions(2, 3)
    assert block_partitions_cached(2, 3) == parts


def test_cache_defaults_and_failures(tmp_path, monkeypatch):
    # a read-only cache directory must degrade to recomputation
    ro = tmp_path / "ro"
    ro.mkdir()
    ro.chmod(0o500)
    monkeypatch.setenv(CACHE_ENV_VAR, str(ro))
    assert character_table_cached(3) == character_table(3)
