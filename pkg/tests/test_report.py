import math

import numpy as np
import pytest

from cnls2d import DomainError, critical_constants, frequency_of_charge, make_params
from cnls2d.report import (
    FIGURES,
    CurveId,
    Spacing,
    figure_tables,
    format_plot_script,
    read_table,
    reproduce_figures,
    sample_curve,
    table_filename,
    write_plot_script,
    write_table,
)


def test_sample_curve_shape_and_defaults(focusing):
    t = sample_curve("E_of_Omega", focusing, 1.27, 20, 50)
    assert t.spacing is Spacing.LOG and len(t.samples) == 50
    assert t.x[0] == 1.27 and t.x[-1] == 20 and np.all(np.diff(t.x) > 0)
    assert sample_curve(CurveId.E_OF_Q, focusing, 0.01, 0.5, 5).spacing is Spacing.LINEAR


def test_energy_curve_minimum_near_critical_point(focusing):
    cc = critical_constants(focusing)
    t = sample_curve(CurveId.E_OF_OMEGA, focusing, 1.27, 20, 2000, Spacing.LOG)
    i = int(np.argmin(t.y))
    assert 0 < i < len(t.x) - 1
    assert t.x[i] == pytest.approx(cc.omega_bar, rel=5e-3)
    assert t.y[i] == pytest.approx(cc.lambda_threshold, rel=1e-5)
    (m,) = t.markers
    assert (m.name, m.x, m.y) == ("omega_bar", cc.omega_bar, cc.lambda_threshold)


def test_mass_curve_single_peak(focusing):
    cc = critical_constants(focusing)
    t = sample_curve(CurveId.M_OF_OMEGA, focusing, 1.27, 50, 2000)
    i = int(np.argmax(t.y))
    d = np.diff(t.y)
    assert np.all(d[:i] > 0) and np.all(d[i:] < 0)
    assert t.x[i] == pytest.approx(cc.omega_bar, rel=5e-3)
    assert t.y[i] == pytest.approx(cc.mu_bar, rel=1e-5)


def test_defocusing_charge_decreasing(defocusing):
    t = sample_curve(CurveId.Q_OF_OMEGA, defocusing, 0.01, 1.26, 300)
    assert np.all(np.diff(t.y) < 0) and t.markers == []


def test_markers_only_inside_range(focusing):
    assert sample_curve(CurveId.M_OF_OMEGA, focusing, 5, 50, 10).markers == []
    assert len(sample_curve(CurveId.M_OF_Q, focusing, 0.01, 0.5, 10).markers) == 1


def test_energy_tables_agree_through_frequency(focusing):
    tq = sample_curve(CurveId.E_OF_Q, focusing, 0.01, 0.5, 200)
    w = frequency_of_charge(focusing, tq.x)
    tw_y = sample_curve(CurveId.E_OF_OMEGA, focusing, w.min(), w.max(), 200).y
    from cnls2d import energy_of_frequency

    np.testing.assert_allclose(energy_of_frequency(focusing, w), tq.y, rtol=1e-10)
    assert tw_y.shape == (200,)


def test_sample_curve_errors(focusing, defocusing):
    with pytest.raises(DomainError):
        sample_curve(CurveId.Q_OF_OMEGA, focusing, 1.0, 3.0, 10)
    with pytest.raises(DomainError):
        sample_curve(CurveId.Q_OF_OMEGA, defocusing, 0.01, 1.3, 10)
    with pytest.raises(DomainError):
        sample_curve(CurveId.E_OF_Q, focusing, 0.0, 1.0, 10)
    with pytest.raises(DomainError):
        sample_curve(CurveId.E_OF_Q, focusing, 0.1, 1.0, 1)
    with pytest.raises(DomainError):
        sample_curve(CurveId.E_OF_Q, focusing, 0.5, 0.1, 10)
    with pytest.raises(ValueError):
        sample_curve("nope", focusing, 0.1, 0.5, 10)


def test_write_table_without_markers(tmp_path, defocusing):
    t = sample_curve(CurveId.E_OF_Q, defocusing, 0.1, 1.0, 7)
    path = write_table(t, tmp_path / table_filename(t))
    lines = path.read_text().splitlines()
    header = [ln for ln in lines if ln.startswith("#")]
    rows = [ln for ln in lines if not ln.startswith("#")]
    assert len(rows) == 7 and all(ln.count("\t") == 1 for ln in rows)
    assert "# curve_id E_of_Q" in header and not any("marker" in ln for ln in header)


def test_write_table_markers_and_round_trip(tmp_path, focusing):
    cc = critical_constants(focusing)
    t = sample_curve(CurveId.M_OF_Q, focusing, 0.01, 0.6, 101)
    path = write_table(t, tmp_path / "m.dat")
    text = path.read_text()
    assert f"# marker q_bar {cc.q_bar!r} {cc.mu_bar!r}" in text
    back = read_table(path)
    assert back == t
    assert back.markers[0].y == cc.mu_bar


def test_write_table_error_has_path(tmp_path, focusing):
    t = sample_curve(CurveId.M_OF_Q, focusing, 0.01, 0.6, 3)
    with pytest.raises(OSError, match="missing"):
        write_table(t, tmp_path / "missing" / "x.dat")


def test_plot_scripts(tmp_path, focusing):
    t1 = sample_curve(CurveId.Q_OF_OMEGA, focusing, 1.27, 20, 10)
    t2 = sample_curve(CurveId.E_OF_OMEGA, focusing, 1.27, 20, 10)
    for t in (t1, t2):
        write_table(t, tmp_path / table_filename(t))
    one = write_plot_script([t1], tmp_path / "one.gp").read_text()
    two = write_plot_script([t1, t2], tmp_path / "two.gp").read_text()
    assert one.count("\nplot ") == 1 and "layout 1,1" in one
    assert two.count("\nplot ") == 2 and "layout 1,2" in two
    assert f"'{table_filename(t2)}'" in two and str(tmp_path) not in two
    assert "omega_bar" in two


def test_plot_script_preconditions(tmp_path, focusing):
    with pytest.raises(ValueError):
        write_plot_script([], tmp_path / "x.gp")
    t = sample_curve(CurveId.Q_OF_OMEGA, focusing, 1.27, 20, 10)
    with pytest.raises(FileNotFoundError):
        write_plot_script([t], tmp_path / "x.gp")


def test_format_plot_script_log_axis(focusing):
    t = sample_curve(CurveId.Q_OF_OMEGA, focusing, 1.27, 20, 10)
    assert "set logscale x" in format_plot_script([t], ["a.dat"], "a.png")


def test_figures_deterministic(tmp_path):
    a = reproduce_figures(tmp_path / "a", n=50)
    b = reproduce_figures(tmp_path / "b", n=50)
    assert len(a) == 3 * len(FIGURES)
    for pa, pb in zip(a, b):
        assert pa.name == pb.name and pa.read_bytes() == pb.read_bytes()


def test_figure_tables_rejects_unknown():
    with pytest.raises(DomainError):
        figure_tables(6)
    assert [t.curve_id for t in figure_tables(5, n=4)] == [CurveId.OMEGA_OF_Q, CurveId.E_OF_Q]
