import json
import subprocess
import sys

import pytest

from coreblocks import cores, definingchar, glnq, symblocks
from coreblocks.config import BoundExceeded
from coreblocks.cli import jsonable, main, run
from coreblocks.partitions import Partition
from coreblocks.symchars import CharTable, character_table, mn_value

P = Partition


def payload(argv):
    result = run(argv)
    assert result.exit_code == 0, result.diagnostics
    return json.loads(result.output)


def test_blocks_command():
    data = payload(["blocks", "4", "3"])
    assert len(data["blocks"]) == 3
    expected = [dict(b.to_dict(), defect_group=b.defect_group_label) for b in symblocks.blocks(4, 3)]
    assert data["blocks"] == expected


def test_flag_form_matches_positional():
    assert run(["blocks", "--n", "4", "--ell", "3"]).output == run(["blocks", "4", "3"]).output
    assert run(["cores", "kiming", "--d", "9", "--n", "188"]).output == run(["cores", "kiming", "9", "188"]).output


def test_conflicting_values_are_usage_errors():
    assert run(["blocks", "4", "3", "--ell", "5"]).exit_code == 2


def test_cores_count_csv():
    result = run(["cores", "count", "3", "10"])
    lines = result.output.splitlines()
    assert lines[0] == "n,c_3(n)"
    assert lines[4] == "3,0" and lines[5] == "4,2"
    assert len(lines) == 12
    series = cores.count_cores_genfun(3, 10)
    assert result.output == series.to_csv()


def test_chartable_round_trip():
    data = payload(["chartable", "1"])
    assert data["values"] == [["1"]]
    for n in (1, 4, 6):
        assert CharTable.from_dict(payload(["chartable", str(n)])) == character_table(n)


def test_kiming_trace():
    data = payload(["cores", "kiming", "9", "188"])
    assert data == jsonable(cores.kiming_construct(9, 188).to_dict())
    assert data["x"] == [2, -2, -2, 2, -2, 2, 3, -3, 0]
    assert data["value"] == 188 and data["value_check"] is True
    assert data["flipped"] is True and data["case"] == "a"


def test_defect_zero_command():
    assert payload(["cores", "defect-zero", "7", "2", "--alternating"])["defect_zero"] is False
    assert payload(["cores", "defect-zero", "8", "2", "--alternating"])["defect_zero"] is True
    assert payload(["cores", "defect-zero", "3", "3"])["defect_zero"] is False
    assert run(["cores", "defect-zero", "4", "2", "--alternating"]).exit_code == 1


def test_glblocks_command():
    data = payload(["glblocks", "3", "3", "13"])
    assert data["d"] == 3
    assert data["blocks"] == [b.to_dict() for b in glnq.unipotent_blocks_gl(3, 3, 13)]
    small = run(["glblocks", "4", "2", "3"])
    assert small.status == "warning" and small.exit_code == 0
    assert all(b["warning"].startswith("outside-theorem-hypotheses") for b in json.loads(small.output)["blocks"])
    assert run(["glblocks", "3", "9", "3"]).exit_code == 1


def test_dseries_and_weights():
    data = payload(["dseries", "3", "2"])
    assert [s["core"] for s in data["series"]] == ["[1]", "[2,1]"]
    assert data["series"][0]["relative_weyl_count"] == 2
    w = payload(["weights", "3", "4"])
    ibr, alp = definingchar.alperin_weight_count(3, 4)
    assert w == {"ibr": str(ibr), "alp": str(alp), "steinberg": "3", "closed_form_check": True}


def test_idempotent_and_brauer():
    e = payload(["idempotent", "3", "2", "1"])
    block = next(b for b in symblocks.blocks(3, 2) if b.core == P((1,)))
    assert e["coefficients"] == symblocks.block_idempotent(block).to_dict()["coefficients"]
    br = payload(["brauer", "4", "3", "1", "(2,3,4)"])
    assert br["matches"] is True and br["image"] == {"()": "1"} and br["fixed_points"] == [1]
    zero = payload(["brauer", "4", "3", "3,1", "(2,3,4)"])
    assert zero["image"] == {} and zero["matches"] is True
    assert run(["brauer", "4", "3", "1", "(1,2)"]).exit_code == 1
    assert run(["idempotent", "4", "3", "2"]).exit_code == 1


def test_mn_command():
    assert payload(["mn", "2,1", "3"])["value"] == "-1"
    assert payload(["mn", "[4,3,1,1]", "3,3,3"])["value"] == str(mn_value(P((4, 3, 1, 1)), P((3, 3, 3))))
    assert run(["mn", "2,1", "2"]).exit_code == 1
    assert run(["mn", "1,2", "3"]).exit_code == 2


def test_formats():
    plain = run(["--format", "plain", "chartable", "2"]).output.splitlines()
    assert plain[1].split() == ["[2]", "1", "1"]
    assert run(["chartable", "2", "--format", "csv"]).output.splitlines()[0] == 'lambda\\mu,[2],"[1,1]"'
    assert run(["blocks", "4", "3", "--format", "csv"]).output.splitlines()[1] == '[1],1,1,true,3,"[4] [2,2] [1,1,1,1]"'
    assert run(["--format", "csv", "weights", "2", "3"]).exit_code == 2
    assert "value: -1" in run(["--format", "plain", "mn", "2,1", "3"]).output


def test_usage_errors():
    for argv in ([], ["bogus"], ["cores"], ["cores", "count"], ["blocks", "x", "3"], ["--help"]):
        result = run(argv)
        assert result.exit_code == 2 and result.status == "error" and result.diagnostics


def test_deterministic():
    argv = ["glblocks", "6", "2", "7"]
    assert run(argv).output == run(argv).output


def test_big_numbers_are_strings():
    assert jsonable({"a": 2**60, "b": 5, "c": [True, -(2**70)]}) == {"a": str(2**60), "b": 5, "c": [True, str(-(2**70))]}
    data = payload(["chartable", "12"])
    assert all(isinstance(c["size"], str) for c in data["classes"])


def test_selftest_command():
    result = run(["selftest", "--max-n", "5"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["max_n"] == 5 and all(s["passed"] for s in data["suites"])
    assert len(data["suites"]) == 10


def test_selftest_failure_exit_code(monkeypatch):
    from coreblocks import selftest

    monkeypatch.setitem(selftest.SUITES, "broken", lambda k: False)
    result = run(["selftest", "--max-n", "3"])
    assert result.exit_code == 1 and "suite failed: broken" in result.diagnostics


def test_env_bound(monkeypatch):
    monkeypatch.setenv("COREBLOCKS_MAX_N", "5")
    assert cores.count_cores_enum(3, 5) == 1
    with pytest.raises(BoundExceeded):
        cores.count_cores_enum(3, 6)


def test_main_and_console_script(capsys):
    assert main(["cores", "count", "2", "3"]) == 0
    assert capsys.readouterr().out == "n,c_2(n)\n0,1\n1,1\n2,0\n3,1\n"
    assert main(["blocks", "4", "4"]) == 1
    assert "not prime" in capsys.readouterr().err
    proc = subprocess.run([sys.executable, "-m", "coreblocks.cli", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2
