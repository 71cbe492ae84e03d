import json

from normanform.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_pi_text(capsys):
    code, out = run(capsys, "pi", "--r", "3", "--s", "4", "--p", "2")
    assert code == 0 and out.strip() == "(1,3)"


def test_lambda_json(capsys):
    code, payload = run_json(capsys, "lambda", "--r", "2", "--s", "3", "--p", "3", "--json")
    assert code == 0
    assert payload["lambda"] == [3, 3]
    assert payload["pi"] == "(1,2)"
    assert payload["epsilon"] == [0, 0]
    assert payload["method"] == "delta-route"
    assert payload["swapped"] is False


def test_swap_metadata(capsys):
    code, payload = run_json(capsys, "lambda", "--r", "3", "--s", "2", "--p", "3", "--json")
    assert code == 0
    assert payload["r"] == 2 and payload["s"] == 3
    assert payload["swapped"] is True


def test_standard_json(capsys):
    code, payload = run_json(capsys, "standard", "--r", "3", "--s", "6", "--p", "2", "--json")
    assert code == 0
    assert payload["verdict"] is True and payload["matched_row"] == 3
    assert set(payload["conditions"]) == {
        "standard_partition", "identity_permutation", "standard_triple",
        "all_left_gaps_one", "all_right_gaps_zero", "all_delta_one"}
    assert all(payload["conditions"].values())


def test_standard_text(capsys):
    code, out = run(capsys, "standard", "--r", "2", "--s", "2", "--p", "2")
    assert code == 0 and out.strip() == "standard=false row=2"


def test_delta_schema(capsys):
    code, payload = run_json(capsys, "delta", "--r", "2", "--s", "2", "--p", "2")
    assert code == 0
    assert payload == {"r": 2, "s": 2, "p": 2, "delta": [1, 0, 1], "L": [1, 2], "R": [1, 0]}


def test_oracle_cli(capsys):
    code, payload = run_json(capsys, "oracle", "--r", "3", "--s", "4", "--p", "2")
    assert code == 0 and payload["partition"] == [4, 4, 4]
    code, payload = run_json(capsys, "oracle", "--r", "2", "--s", "2", "--p", "2",
                             "--kind", "nilpotent")
    assert code == 0 and payload["partition"] == [2, 1, 1]


def test_oracle_cap_exit_code(capsys):
    code, payload = run_json(capsys, "oracle", "--r", "40", "--s", "40", "--p", "2",
                             "--cap", "100")
    assert code == 2 and payload["error"]["code"] == "resource-cap"


def test_norman_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("NORMAN_CAP", "10")
    code, payload = run_json(capsys, "oracle", "--r", "4", "--s", "4", "--p", "2")
    assert code == 2 and payload["error"]["code"] == "resource-cap"
    monkeypatch.setenv("NORMAN_CAP", "junk")
    code, payload = run_json(capsys, "oracle", "--r", "2", "--s", "2", "--p", "2")
    assert code == 2 and payload["error"]["code"] == "usage"


def test_green_cli(capsys):
    code, payload = run_json(capsys, "green", "--r", "4", "--s", "6", "--p", "3")
    assert code == 0
    assert payload["summands"] == [{"dim": 9, "mult": 1}, {"dim": 6, "mult": 2},
                                   {"dim": 3, "mult": 1}]


def test_group_cli(capsys):
    code, payload = run_json(capsys, "group", "--r", "6", "--p", "3", "--verify")
    assert code == 0 and payload["verdict"] is True and payload["order"] == 48
    code, payload = run_json(capsys, "group", "--r", "3", "--p", "2", "--census")
    assert code == 0 and payload["census"] == 4
    code, payload = run_json(capsys, "group", "--r", "6", "--p", "3", "--blocks")
    assert code == 0 and payload["blocks"] == [[1, 4], [2, 5], [3, 6]]


def test_corr_cli_three_inputs(capsys):
    code, a = run_json(capsys, "corr", "--r", "4", "--t", "2")
    code2, b = run_json(capsys, "corr", "--eps", "2,2,-2,-2")
    code3, c = run_json(capsys, "corr", "--r", "4", "--pi", "(1,2)(3,4)")
    assert code == code2 == code3 == 0
    assert a == b == c
    assert a["pi"] == "(1,2)(3,4)" and a["subset"] == [2]


def test_corr_usage_errors(capsys):
    code, payload = run_json(capsys, "corr", "--r", "4")
    assert code == 2 and payload["error"]["code"] == "usage"
    code, payload = run_json(capsys, "corr", "--eps", "1,0,-1")
    assert code == 2 and payload["error"]["code"] == "invalid-argument"


def test_invalid_argument_exit(capsys):
    code, payload = run_json(capsys, "pi", "--r", "3", "--s", "4", "--p", "4")
    assert code == 2 and payload["error"]["code"] == "invalid-argument"


def test_table_pi3(capsys):
    code, out = run(capsys, "table", "--name", "pi3", "--primes", "2,3")
    assert code == 0
    assert "(1,3)" in out and "(2,3)" in out and "(1,2)" in out
    assert "FAIL" not in out


def test_table_small_s(capsys):
    code, out = run(capsys, "table", "--name", "small-s", "--primes", "2", "--rmax", "10")
    assert code == 0 and "FAIL" not in out


def test_sweep_csv(capsys):
    code, out = run(capsys, "sweep", "--checks", "involution,bijection-roundtrip",
                    "--rmax", "5", "--primes", "2,3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "r,s,p,check,status,detail"
    assert all(",fail," not in line for line in lines[1:])
    # fixed column order and sorted rows make the artifact diffable
    assert lines[1].startswith("1,")


def test_sweep_table_format(capsys):
    code, out = run(capsys, "sweep", "--checks", "oracle-equiv", "--rmax", "4",
                    "--primes", "2", "--format", "table")
    assert code == 0 and "oracle-equiv" in out and "passed" in out


def test_sweep_six_way_period(capsys):
    code, out = run(capsys, "sweep", "--checks", "six-way", "--rmax", "6",
                    "--primes", "2,3", "--format", "table")
    assert code == 0


def test_sweep_workers_deterministic(capsys):
    args = ["sweep", "--checks", "involution,fast-path", "--rmax", "6",
            "--primes", "2,3", "--format", "csv"]
    code1, out1 = run(capsys, *args)
    code2, out2 = run(capsys, *args, "--workers", "4")
    assert code1 == code2 == 0
    assert out1 == out2


def test_sweep_unknown_check(capsys):
    code, payload = run_json(capsys, "sweep", "--checks", "nonsense")
    assert code == 2 and payload["error"]["code"] == "usage"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code = main(["delta", "--r", "2", "--s", "2", "--p", "2", "--out", str(target)])
    assert code == 0
    assert json.loads(target.read_text())["delta"] == [1, 0, 1]


def test_byte_identical_reruns(capsys):
    a = run(capsys, "lambda", "--r", "6", "--s", "11", "--p", "3", "--json")
    b = run(capsys, "lambda", "--r", "6", "--s", "11", "--p", "3", "--json")
    assert a == b
