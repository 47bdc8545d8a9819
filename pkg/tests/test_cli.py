import math
import re

import numpy as np
import pytest

from qubit_dephasing.cli import (
    CSV_HEADER,
    KS_IN_SECONDS,
    ExperimentConfig,
    OracleCheckConfig,
    config_from_mapping,
    emit_csv,
    load_config,
    main,
    oracle_config_from_mapping,
    parse_config_text,
    run_experiment,
    run_oracle_check,
    serialize_config,
)
from qubit_dephasing.errors import ConfigError

FLOAT_CELL = re.compile(r"^-?\d\.\d{16}e[+-]\d{2,3}$")

SAMPLE_CONFIG = """
# sweep setup
eta = 2e-5
omega_c = 5e11   # angular cutoff
alpha = 2+0j
beta = 1e-12
n_points = 16
t_end = 6e-12
"""


def read_rows(path):
    with open(path, "r", encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    return lines[0], np.array(
        [[float(cell) for cell in line.split(",")] for line in lines[1:]]
    )


def test_parse_config_text():
    mapping = parse_config_text(SAMPLE_CONFIG)
    cfg = config_from_mapping(mapping)
    assert cfg.eta == 2e-5
    assert cfg.omega_c == 5e11
    assert cfg.alpha == 2 + 0j
    assert cfg.beta == 1e-12
    assert cfg.n_points == 16
    assert cfg.t_end == 6e-12
    assert cfg.e_j1 == 1e10  # untouched default


def test_parse_config_rejects_unknown_key():
    with pytest.raises(ConfigError):
        parse_config_text("bogus = 1\n")


def test_parse_config_rejects_duplicate_key():
    with pytest.raises(ConfigError):
        parse_config_text("eta = 1e-5\neta = 2e-5\n")


def test_parse_config_rejects_malformed_line():
    with pytest.raises(ConfigError):
        parse_config_text("eta\n")
    with pytest.raises(ConfigError):
        parse_config_text("eta =\n")


def test_config_rejects_bad_value():
    with pytest.raises(ConfigError):
        config_from_mapping({"eta": "fast"})
    with pytest.raises(ConfigError):
        config_from_mapping({"eta": "-1e-5"})
    with pytest.raises(ConfigError):
        config_from_mapping({"n_points": "1"})
    with pytest.raises(ConfigError):
        config_from_mapping({"beta": "0"})


def test_config_round_trip_is_lossless():
    cfg = ExperimentConfig(
        eta=3e-5,
        omega_c=7.5e11,
        beta=2e-12,
        e_j1=9e9,
        e_j2=1.1e10,
        alpha=0.5 + 0.25j,
        t_start=1e-13,
        t_end=1.1e-11,
        n_points=37,
        output_path="sweep.csv",
    )
    assert config_from_mapping(parse_config_text(serialize_config(cfg))) == cfg


def test_config_round_trip_without_optionals():
    cfg = ExperimentConfig()
    again = config_from_mapping(parse_config_text(serialize_config(cfg)))
    assert again == cfg
    assert again.beta is None


def test_oracle_config_from_shared_file():
    text = "eta = 1e-5\noracle_n_max = 6\noracle_seed = 11\n"
    ocfg = oracle_config_from_mapping(parse_config_text(text))
    assert ocfg.n_max == 6
    assert ocfg.seed == 11
    assert ocfg.e_j == 1e10  # default untouched by experiment keys


def test_run_experiment_first_row_is_pristine():
    cfg = ExperimentConfig(n_points=4, t_end=2e-12, alpha=2.0 + 0j)
    rows = run_experiment(cfg)
    assert len(rows) == 4
    first = rows[0]
    assert first.t_seconds == 0.0
    assert first.g1 == 0.0 and first.g2 == 0.0
    assert first.delta1 == 1.0 and first.delta2 == 1.0
    assert first.d1 == 0.0
    assert first.concurrence == pytest.approx(0.8, abs=1e-10)
    assert first.s_reference == pytest.approx(0.8, abs=1e-12)


def test_run_experiment_matches_reference_for_maximal_entanglement():
    cfg = ExperimentConfig(n_points=12, alpha=1.0 + 0j)
    for row in run_experiment(cfg):
        assert row.concurrence == pytest.approx(row.s_reference, abs=1e-10)
        assert row.g1 == row.g2
        assert row.delta1 == pytest.approx(math.exp(-4.0 * row.g1), rel=1e-14)


def test_run_experiment_strict_gap_for_partial_entanglement():
    # alpha != 1: the dephased concurrence falls strictly below the
    # product reference, by (1 - delta1 delta2) * (1/2 - ab)
    cfg = ExperimentConfig(n_points=10, alpha=2.0 + 0j)
    rows = run_experiment(cfg)
    a_w = 1.0 / math.sqrt(5.0)
    b_w = 2.0 / math.sqrt(5.0)
    for row in rows[1:]:
        dd = row.delta1 * row.delta2
        closed = max(0.0, (1.0 + dd) * a_w * b_w - 0.5 * (1.0 - dd))
        assert row.concurrence == pytest.approx(closed, abs=1e-10)
        assert row.concurrence < row.s_reference


def test_emit_csv_layout_and_determinism(tmp_path):
    cfg = ExperimentConfig(n_points=5, t_end=3e-12)
    rows = run_experiment(cfg)
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    emit_csv(rows, str(first))
    emit_csv(run_experiment(cfg), str(second))
    assert first.read_bytes() == second.read_bytes()

    raw = first.read_bytes()
    assert raw.startswith(CSV_HEADER.encode("utf-8") + b"\n")
    assert b"\r" not in raw
    assert raw.endswith(b"\n")

    header, data = read_rows(str(first))
    assert header == CSV_HEADER
    assert data.shape == (5, 10)
    for line in raw.decode("utf-8").splitlines()[1:]:
        for cell in line.split(","):
            assert FLOAT_CELL.match(cell), cell
    np.testing.assert_allclose(data[:, 1], data[:, 0] / KS_IN_SECONDS, rtol=1e-15)
    np.testing.assert_allclose(data[-1, 0], 3e-12, rtol=1e-15)


def test_emit_csv_rejects_empty():
    with pytest.raises(ValueError):
        emit_csv([], "unused.csv")


def test_run_oracle_check_default_passes():
    rows, violations = run_oracle_check(OracleCheckConfig(samples=4))
    assert violations == []
    assert len(rows) == 3
    assert rows[0].t_seconds == 4e-13
    for row in rows:
        assert row.channel_vs_split < 1e-6
        assert 6.0 <= row.ratio_at_half_t <= 10.0


def test_run_oracle_check_flags_oversized_coupling():
    # coupling far outside the truncation budget: the channel no longer
    # matches the brute-force propagator inside the short-time window
    cfg = OracleCheckConfig(g=2e12 + 0j, samples=4)
    _, violations = run_oracle_check(cfg)
    assert violations


def test_main_gfactor_and_exit_zero(tmp_path):
    out = tmp_path / "g.csv"
    assert main(["gfactor", "--points", "6", "--out", str(out)]) == 0
    header, data = read_rows(str(out))
    assert header == "t_seconds,t_ks,g,delta"
    assert data.shape == (6, 4)
    np.testing.assert_allclose(data[:, 3], np.exp(-4.0 * data[:, 2]), rtol=1e-12)


def test_main_evolve_trajectory(tmp_path):
    out = tmp_path / "traj.csv"
    assert main(["evolve", "--points", "4", "--out", str(out)]) == 0
    header, data = read_rows(str(out))
    cols = header.split(",")
    assert cols[:2] == ["t_seconds", "t_ks"]
    assert len(cols) == 2 + 32  # re/im for all 16 entries
    assert data.shape == (4, 34)
    # trace of the reshaped state stays one
    re_cells = data[:, 2::2]
    traces = re_cells[:, 0] + re_cells[:, 5] + re_cells[:, 10] + re_cells[:, 15]
    np.testing.assert_allclose(traces, 1.0, atol=1e-12)


def test_main_fig1_bundle(tmp_path):
    assert main(["fig1", "--points", "10", "--out", str(tmp_path)]) == 0
    gaps = {}
    for idx in (1, 2, 3):
        header, data = read_rows(str(tmp_path / f"fig1_alpha{idx}.csv"))
        assert header == CSV_HEADER
        assert data.shape == (10, 10)
        c, s = data[:, 6], data[:, 7]
        assert np.all(c <= s + 1e-12)
        assert np.all(np.diff(c) < 0.0)  # strictly decaying
        gaps[idx] = s[1:] - c[1:]
    assert np.max(np.abs(gaps[1])) <= 1e-10  # equality only for alpha = 1
    assert np.min(gaps[2]) > 1e-12
    assert np.min(gaps[3]) > 1e-12


def test_main_fig1_single_alpha(tmp_path):
    out = tmp_path / "one.csv"
    assert main(["fig1", "--points", "5", "--alpha", "3", "--out", str(out)]) == 0
    header, data = read_rows(str(out))
    assert header == CSV_HEADER
    assert data[0, 6] == pytest.approx(0.6, abs=1e-10)


def test_main_config_file_flow(tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text(SAMPLE_CONFIG, encoding="utf-8")
    out = tmp_path / "sweep.csv"
    code = main(["fig1", "--config", str(conf), "--out", str(out), "--alpha", "2+0j"])
    assert code == 0
    _, data = read_rows(str(out))
    assert data.shape == (16, 10)
    np.testing.assert_allclose(data[-1, 0], 6e-12, rtol=1e-15)


def test_main_exit_two_on_config_errors(tmp_path):
    conf = tmp_path / "bad.conf"
    conf.write_text("bogus = 1\n", encoding="utf-8")
    assert main(["gfactor", "--config", str(conf)]) == 2
    assert main(["gfactor", "--points", "1"]) == 2
    assert main(["gfactor", "--beta", "-1"]) == 2


def test_main_exit_three_on_tolerance_failure(tmp_path):
    conf = tmp_path / "oracle.conf"
    conf.write_text("oracle_g = 2e12+0j\noracle_samples = 4\n", encoding="utf-8")
    out = tmp_path / "oc.csv"
    assert main(["oracle-check", "--config", str(conf), "--out", str(out)]) == 3
    assert out.exists()  # rows are still written for inspection


def test_main_exit_four_on_io_failure(tmp_path):
    missing_dir = tmp_path / "no" / "such" / "dir"
    assert main(["gfactor", "--points", "4", "--out", str(missing_dir / "x.csv")]) == 4
    assert main(["gfactor", "--config", str(tmp_path / "absent.conf")]) == 4


def test_main_oracle_check_happy_path(tmp_path):
    out = tmp_path / "oc.csv"
    conf = tmp_path / "oracle.conf"
    conf.write_text("oracle_samples = 4\n", encoding="utf-8")
    assert main(["oracle-check", "--config", str(conf), "--out", str(out)]) == 0
    header, data = read_rows(str(out))
    assert header == "t_seconds,split_vs_exact,channel_vs_split,ratio_at_half_t"
    assert data.shape == (3, 4)
    assert np.all(data[:, 3] > 6.0) and np.all(data[:, 3] < 10.0)


def test_load_config_round_trip_through_disk(tmp_path):
    cfg = ExperimentConfig(alpha=1.5 + 0.5j, beta=3e-12, n_points=21)
    path = tmp_path / "saved.conf"
    path.write_text(serialize_config(cfg), encoding="utf-8")
    assert config_from_mapping(load_config(str(path))) == cfg
