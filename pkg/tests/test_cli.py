import subprocess
import sys

from finring import cli, rings


def run_cli(args, capsys):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ring_build_stdout(capsys):
    code, out, _ = run_cli(["ring", "build", "zn", "2"], capsys)
    assert code == 0
    assert out == rings.format_ringtab(rings.zn(2))


def test_ring_build_and_info(tmp_path, capsys):
    path = str(tmp_path / "n4.ring")
    code, out, _ = run_cli(["ring", "build", "np2", "2", "--out", path], capsys)
    assert code == 0 and out == ""
    code, out, _ = run_cli(["ring", "info", path], capsys)
    assert code == 0
    assert "is_nilpotent: 3" in out
    assert "characteristic: 4" in out


def test_ring_info_z9(tmp_path, capsys):
    path = str(tmp_path / "z9.ring")
    run_cli(["ring", "build", "zn", "9", "--out", path], capsys)
    code, out, _ = run_cli(["ring", "info", path], capsys)
    assert code == 0
    assert "is_local: true" in out
    assert "jacobson_radical: 0 3 6" in out


def test_ring_build_not_prime(capsys):
    code, _, err = run_cli(["ring", "build", "gf", "4", "2"], capsys)
    assert code == 2
    assert "not prime" in err


def test_ring_build_quotient_and_sum(tmp_path, capsys):
    z9 = str(tmp_path / "z9.ring")
    run_cli(["ring", "build", "zn", "9", "--out", z9], capsys)
    code, out, _ = run_cli(["ring", "build", "quotient", z9, "0,3,6"], capsys)
    assert code == 0 and "order 3" in out
    code, _, err = run_cli(["ring", "build", "quotient", z9, "0,3"], capsys)
    assert code == 2
    z2 = str(tmp_path / "z2.ring")
    run_cli(["ring", "build", "zn", "2", "--out", z2], capsys)
    code, out, _ = run_cli(["ring", "build", "sum", z2, z2], capsys)
    assert code == 0 and "order 4" in out


def test_zdg_graph_and_dot(tmp_path, capsys):
    gf4 = str(tmp_path / "gf4.ring")
    run_cli(["ring", "build", "gf", "2", "2", "--out", gf4], capsys)
    code, out, _ = run_cli(["zdg", "graph", gf4], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0 vertices, 0 edges"
    assert lines[1] == "certificate " + "G1;n=0;".encode().hex()
    n4 = str(tmp_path / "n4.ring")
    dot = str(tmp_path / "n4.dot")
    run_cli(["ring", "build", "np2", "2", "--out", n4], capsys)
    code, out, _ = run_cli(["zdg", "graph", n4, "--dot", dot], capsys)
    assert code == 0 and out.splitlines()[0] == "3 vertices, 2 edges"
    assert "0 -- 1;" in open(dot).read()


def test_zdg_iso_exit_codes(tmp_path, capsys):
    n4 = str(tmp_path / "n4.ring")
    mix = str(tmp_path / "mix.ring")
    z9 = str(tmp_path / "z9.ring")
    n02 = str(tmp_path / "n02.ring")
    z2 = str(tmp_path / "z2.ring")
    run_cli(["ring", "build", "np2", "2", "--out", n4], capsys)
    run_cli(["ring", "build", "n0", "2", "1", "--out", n02], capsys)
    run_cli(["ring", "build", "zn", "2", "--out", z2], capsys)
    run_cli(["ring", "build", "sum", n02, z2, "--out", mix], capsys)
    run_cli(["ring", "build", "zn", "9", "--out", z9], capsys)
    code, out, _ = run_cli(["zdg", "iso", n4, mix], capsys)
    assert code == 0 and out.startswith("isomorphic")
    code, out, _ = run_cli(["zdg", "iso", z9, n4], capsys)
    assert code == 1 and "not isomorphic" in out


def test_identity_check(tmp_path, capsys):
    n4 = str(tmp_path / "n4.ring")
    run_cli(["ring", "build", "np2", "2", "--out", n4], capsys)
    suite = tmp_path / "t.suite"
    suite.write_text("# identities\nxyz\n4x\n2xy\n2x+x^2\n")
    code, out, _ = run_cli(["identity", "check", n4, str(suite)], capsys)
    assert code == 0
    assert out.count("PASS") == 4
    z4 = str(tmp_path / "z4.ring")
    run_cli(["ring", "build", "zn", "4", "--out", z4], capsys)
    code, out, _ = run_cli(["identity", "check", z4, "2x"], capsys)
    assert code == 1
    assert "FAIL 2x at x=1" in out
    code, _, err = run_cli(["identity", "check", z4, "2x + ("], capsys)
    assert code == 2


def test_atlas_build_counts(capsys):
    code, out, _ = run_cli(["atlas", "build", "4"], capsys)
    assert code == 0
    assert out == "11 classes\n"


def test_atlas_build_cap(capsys):
    code, _, err = run_cli(["atlas", "build", "16"], capsys)
    assert code == 3


def test_atlas_env_override(capsys, monkeypatch):
    monkeypatch.setenv(cli.ENUM_CAP_VAR, "12")
    code, out, _ = run_cli(["atlas", "build", "12"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "# enumeration cap override: 12 (FINRING_ENUM_CAP)"
    assert "22 classes" in out
    monkeypatch.setenv(cli.ENUM_CAP_VAR, "99")
    code, _, err = run_cli(["atlas", "build", "4"], capsys)
    assert code == 2


def test_atlas_query(atlas_dir, capsys):
    code, out, _ = run_cli(
        ["atlas", "query", "--graph", "K2", "--max-order", "9", "--atlas-dir", str(atlas_dir)],
        capsys,
    )
    assert code == 0
    assert "4 matches" in out
    orders = sorted(
        int(line.split()[1]) for line in out.splitlines() if line.startswith("order")
    )
    assert orders == [3, 4, 9, 9]


def test_atlas_query_dot_file(tmp_path, atlas_dir, capsys):
    dot = tmp_path / "k1.dot"
    dot.write_text("graph {\n  0;\n}\n")
    code, out, _ = run_cli(
        ["atlas", "query", "--graph", str(dot), "--max-order", "4", "--atlas-dir", str(atlas_dir)],
        capsys,
    )
    assert code == 0
    assert "3 matches" in out


def test_verify_pass_and_output_shape(capsys):
    code, out, _ = run_cli(["verify", "prop5", "--p", "2"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "RESULT prop5 PASS"
    assert all(line.startswith("  ") for line in lines[1:])


def test_verify_deterministic_output(capsys):
    _, first, _ = run_cli(["verify", "tn4-identities"], capsys)
    _, second, _ = run_cli(["verify", "tn4-identities"], capsys)
    assert first == second


def test_verify_uses_atlas_cache(atlas_dir, capsys):
    code, out, _ = run_cli(
        ["verify", "theorem3-shape", "--atlas-dir", str(atlas_dir)], capsys
    )
    assert code == 0
    assert out.startswith("RESULT theorem3-shape PASS")


def test_cli_module_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "finring", "verify", "prop5", "--p", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("RESULT prop5 PASS")


def test_missing_file_is_input_error(capsys):
    code, _, err = run_cli(["ring", "info", "/nonexistent/thing.ring"], capsys)
    assert code == 2
