import pytest

from cnls2d import critical_constants, ground_state_frequency, make_params, mass_of_frequency
from cnls2d.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse(out, sep=": "):
    return dict(line.split(sep, 1) for line in out.splitlines())


def test_constants(capsys):
    code, out, _ = run(capsys, "constants", "--sigma", "1", "--beta", "-1")
    d = parse(out)
    assert code == 0
    assert round(float(d["omega_tilde"]), 2) == 1.26 and round(float(d["omega_bar"]), 2) == 3.43
    cc = critical_constants(make_params(1, -1))
    assert d["mu_bar"] == format(cc.mu_bar, ".12g")


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--sigma", "1", "--beta", "-1", "classify", "--omega", "10")
    assert code == 0 and parse(out)["verdict"] == "Unstable"


def test_classify_examples(capsys):
    assert parse(run(capsys, "classify", "--sigma", "1", "--beta", "-1", "--omega", "2")[1])["verdict"] == "Stable"
    assert parse(run(capsys, "classify", "--sigma", "1", "--beta", "1", "--q", "0.2")[1])["verdict"] == "Stable"


def test_records_format(capsys):
    code, out, _ = run(capsys, "ground-state", "--sigma", "1", "--beta", "1", "--mu", "0.01", "--format", "records")
    d = parse(out, "=")
    r = ground_state_frequency(make_params(1, 1), 0.01)
    assert code == 0 and d["omega_mu"] == format(r.omega_mu, ".12g")


def test_thin_adapter_mass_invert(capsys):
    code, out, _ = run(capsys, "mass-invert", "--sigma", "1", "--beta", "-1", "--mu", "1e-3")
    d = parse(out)
    p = make_params(1, -1)
    assert code == 0
    assert mass_of_frequency(p, float(d["omega_low"])) == pytest.approx(1e-3, rel=1e-10)
    assert float(d["omega_high"]) == pytest.approx(16.1474084699, rel=1e-11)


def test_spectrum_and_escape_and_vnorm(capsys):
    d = parse(run(capsys, "spectrum", "--sigma", "1", "--beta", "-1", "--omega", "2")[1])
    assert float(d["negative_eigenvalue"]) == pytest.approx(-3.0314, abs=1e-4)
    d = parse(run(capsys, "escape", "--sigma", "1", "--beta", "-1", "--mu", "1", "--n", "4")[1])
    assert float(d["energy"]) == pytest.approx(-90.77, abs=5e-3)
    d = parse(run(capsys, "vnorm-dist", "--sigma", "1", "--beta", "-1", "--omega", "2", "3")[1])
    assert float(d["distance"]) == pytest.approx(0.03213645369147591, rel=1e-8)


def test_curves_stdout_and_files(capsys, tmp_path):
    code, out, _ = run(capsys, "curves", "--sigma", "1", "--beta", "-1", "--curve", "M_of_Omega",
                       "--range", "1.27:50", "--points", "5")
    assert code == 0 and out.startswith("# curve_id M_of_Omega") and out.count("\n") == 12
    code, out, _ = run(capsys, "curves", "--sigma", "1", "--beta", "-1", "--figure", "2", "--points", "9",
                       "--out", str(tmp_path))
    assert code == 0 and len(list(tmp_path.iterdir())) == 3
    code, out, _ = run(capsys, "curves", "--sigma", "1", "--beta", "1", "--curve", "Q_of_Omega",
                       "--range", "0.1:1.2", "--out", str(tmp_path / "q.dat"))
    assert code == 0 and (tmp_path / "q.dat").exists()


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--sigma", "1", "--beta", "-1")
    assert code == 0 and "FAIL" not in out and out.strip().endswith("checks passed")


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--sigma", "1", "--beta", "-1", "--omega", "1.0"],
        ["classify", "--sigma", "1", "--beta", "1", "--omega", "3"],
        ["constants", "--sigma", "-1", "--beta", "-1"],
        ["constants", "--sigma", "1", "--beta", "0"],
        ["mass-invert", "--sigma", "1", "--beta", "-1", "--mu", "0.01"],
        ["ground-state", "--sigma", "1", "--beta", "-1", "--mu", "0.01"],
        ["escape", "--sigma", "1", "--beta", "-1", "--mu", "1", "--n", "0"],
        ["curves", "--sigma", "1", "--beta", "-1", "--curve", "Q_of_Omega", "--range", "0.5:2"],
        ["curves", "--sigma", "1", "--beta", "-1"],
    ],
)
def test_domain_errors_exit_one(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error: ") and out == ""


def test_io_error_exit_one(capsys, tmp_path):
    code, _, err = run(capsys, "curves", "--sigma", "1", "--beta", "-1", "--curve", "M_of_Q",
                       "--range", "0.1:0.5", "--out", str(tmp_path / "no" / "x.dat"))
    assert code == 1 and "x.dat" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["constants"],
        ["constants", "--sigma", "1"],
        ["classify", "--sigma", "1", "--beta", "-1"],
        ["classify", "--sigma", "1", "--beta", "-1", "--omega", "abc"],
        ["escape", "--sigma", "1", "--beta", "-1", "--mu", "1", "--n", "2.5"],
        ["curves", "--sigma", "1", "--beta", "-1", "--range", "1-2", "--curve", "M_of_Q"],
        ["bogus", "--sigma", "1", "--beta", "-1"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
