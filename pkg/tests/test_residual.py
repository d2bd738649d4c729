import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from crosstide import (
    AngularSample,
    IllConditionedError,
    SampleFormatError,
    amplitude_ratios,
    cross_channel,
    delta_a45,
    delta_a45_microgal,
    fit_quadratures,
    fit_report,
    projected_acceleration,
    read_samples_csv,
    synthesize_residual,
    write_samples_csv,
)


def uniform_betas(n):
    return [2.0 * math.pi * k / n for k in range(n)]


# ------------------------------------------------------------ projections


def test_projection_table(scale):
    a0 = scale.a0
    assert projected_acceleration(scale, 0.0, math.radians(45.0)) == pytest.approx(0.5 * a0, rel=1e-12)
    assert projected_acceleration(scale, 0.0, 0.0) == pytest.approx(2.0 * a0, rel=1e-12)
    for chi in (-1.0, 0.2, 3.0):
        assert projected_acceleration(scale, chi, math.radians(45.0)) == pytest.approx(
            a0 * (0.5 + chi), rel=1e-12
        )


def test_cross_channel_zeros_and_extrema(scale):
    chi = 0.37
    for deg in (0.0, 90.0, 180.0, 270.0):
        assert abs(cross_channel(scale, chi, math.radians(deg))) < 1e-15 * scale.a0
    assert cross_channel(scale, chi, math.radians(45.0)) == pytest.approx(scale.a0 * chi, rel=1e-12)
    assert cross_channel(scale, chi, math.radians(135.0)) == pytest.approx(-scale.a0 * chi, rel=1e-12)
    # extremal magnitude over a fine sweep is the 45-degree value
    sweep = max(abs(cross_channel(scale, chi, b)) for b in np.linspace(0, 2 * math.pi, 7200))
    assert sweep <= scale.a0 * abs(chi) * (1.0 + 1e-12)


def test_delta_a45_scale_examples(scale):
    assert delta_a45_microgal(scale, 1e-2) == pytest.approx(0.55, rel=0.02)
    assert delta_a45_microgal(scale, 1e-3) == pytest.approx(0.055, rel=0.02)
    assert delta_a45(scale, 0.0) == 0.0
    assert delta_a45(scale, 2.0) == pytest.approx(2.0 * scale.a0, rel=1e-14)


def test_amplitude_ratio_examples():
    assert amplitude_ratios(0.2) == (pytest.approx(0.1), pytest.approx(0.2))
    assert amplitude_ratios(0.0) == (0.0, 0.0)
    assert amplitude_ratios(-0.4) == (pytest.approx(0.2), pytest.approx(0.4))


@given(st.floats(min_value=-10, max_value=10), st.floats(min_value=0, max_value=2 * math.pi))
def test_projection_decomposition_property(chi, beta, ):
    from crosstide import TidalScale

    s = TidalScale(kappa_M=1.0, a0=1.0)
    total = projected_acceleration(s, chi, beta)
    plus = projected_acceleration(s, 0.0, beta)
    cross = cross_channel(s, chi, beta)
    assert total == pytest.approx(plus + cross, rel=1e-12, abs=1e-12)


# ------------------------------------------------------------ synthesis


def test_synthesize_noiseless_exact(scale):
    betas = uniform_betas(12)
    a_c, a_s = 1.5 * scale.a0, 1e-2 * scale.a0
    samples = synthesize_residual(scale, a_c, a_s, betas, noise_sigma=0.0)
    for smp in samples:
        expected = a_c * math.cos(2 * smp.beta) + a_s * math.sin(2 * smp.beta)
        assert smp.accel == expected
        assert smp.sigma == 0.0


def test_synthesize_deterministic(scale):
    betas = uniform_betas(50)
    first = synthesize_residual(scale, scale.a0, 0.1 * scale.a0, betas, noise_sigma=1e-9, seed=99)
    second = synthesize_residual(scale, scale.a0, 0.1 * scale.a0, betas, noise_sigma=1e-9, seed=99)
    assert first == second
    third = synthesize_residual(scale, scale.a0, 0.1 * scale.a0, betas, noise_sigma=1e-9, seed=100)
    assert third != first


def test_synthesize_noise_mean(scale):
    n = 100_000
    sigma = 1e-8
    samples = synthesize_residual(scale, 0.0, 0.0, [0.3] * n, noise_sigma=sigma, seed=5)
    mean = sum(smp.accel for smp in samples) / n
    assert abs(mean) < 4.0 * sigma / math.sqrt(n)


def test_synthesize_validation(scale):
    with pytest.raises(ValueError):
        synthesize_residual(scale, 0.0, 0.0, [], noise_sigma=0.0)
    with pytest.raises(ValueError):
        synthesize_residual(scale, 0.0, 0.0, [0.1], noise_sigma=-1.0)


# ------------------------------------------------------------ fitting


def test_fit_recovers_noiseless_amplitudes(scale):
    betas = uniform_betas(36)
    a_c, a_s = 1.5 * scale.a0, 1e-2 * scale.a0
    samples = synthesize_residual(scale, a_c, a_s, betas)
    fit = fit_quadratures(samples, scale)
    assert fit.a_c == pytest.approx(a_c, rel=1e-10)
    assert fit.a_s == pytest.approx(a_s, rel=1e-10)
    assert abs(fit.a_const) < 1e-12 * scale.a0
    assert fit.chi_hat == pytest.approx(1e-2, rel=1e-10)
    assert fit.residual_rms < 1e-12 * scale.a0
    assert fit.n_samples == 36
    assert fit.chi_hat * scale.a0 == pytest.approx(fit.a_s, rel=1e-15)


def test_fit_full_projection_no_sine_for_chi_zero(scale):
    betas = uniform_betas(24)
    samples = [AngularSample(b, projected_acceleration(scale, 0.0, b)) for b in betas]
    fit = fit_quadratures(samples, scale)
    assert abs(fit.a_s) < 1e-12 * scale.a0
    assert fit.a_const == pytest.approx(0.5 * scale.a0, rel=1e-12)
    assert fit.a_c == pytest.approx(1.5 * scale.a0, rel=1e-12)


def test_fit_round_trip_random_draws(scale):
    rng = np.random.default_rng(2024)
    betas = uniform_betas(36)
    for _ in range(1000):
        a_c = float(rng.uniform(-3, 3)) * scale.a0
        a_s = float(rng.uniform(-3, 3)) * scale.a0
        samples = synthesize_residual(scale, a_c, a_s, betas)
        fit = fit_quadratures(samples, scale)
        assert abs(fit.a_c - a_c) <= 1e-10 * scale.a0 * max(abs(a_c / scale.a0), 1.0)
        assert abs(fit.a_s - a_s) <= 1e-10 * scale.a0 * max(abs(a_s / scale.a0), 1.0)


def test_fit_quadrature_cross_talk(scale):
    # adding a pure sine component must not move the cosine amplitude
    betas = uniform_betas(40)
    base = synthesize_residual(scale, 2.0 * scale.a0, 0.0, betas)
    spiked = synthesize_residual(scale, 2.0 * scale.a0, 5.0 * scale.a0, betas)
    fit_base = fit_quadratures(base, scale)
    fit_spiked = fit_quadratures(spiked, scale)
    assert abs(fit_spiked.a_c - fit_base.a_c) < 1e-12 * scale.a0
    assert abs(fit_base.a_s) < 1e-12 * scale.a0


def test_fit_weighted_matches_unweighted_on_uniform_sigma(scale):
    betas = uniform_betas(30)
    plain = synthesize_residual(scale, scale.a0, 0.3 * scale.a0, betas)
    weighted = [AngularSample(s.beta, s.accel, sigma=1e-9) for s in plain]
    unweighted = [AngularSample(s.beta, s.accel) for s in plain]
    fw = fit_quadratures(weighted, scale)
    fu = fit_quadratures(unweighted, scale)
    assert fw.a_s == pytest.approx(fu.a_s, rel=1e-12)
    assert fw.a_c == pytest.approx(fu.a_c, rel=1e-12)


def test_fit_statistical_consistency_smoke(scale):
    # full 100-trial version runs in the acceptance suite
    n = 10_000
    sigma = 1e-2 * scale.a0
    betas = uniform_betas(n)
    sd_chi = (sigma / scale.a0) * math.sqrt(2.0 / n)
    hits = 0
    for seed in range(10):
        samples = synthesize_residual(scale, 0.0, 3e-3 * scale.a0, betas, noise_sigma=sigma, seed=seed)
        fit = fit_quadratures(samples, scale)
        if abs(fit.chi_hat - 3e-3) < 5.0 * sd_chi:
            hits += 1
    assert hits == 10


def test_fit_rejects_too_few_samples(scale):
    samples = synthesize_residual(scale, scale.a0, 0.0, [0.1, 0.7])
    with pytest.raises(IllConditionedError, match="at least 3"):
        fit_quadratures(samples, scale)


def test_fit_rejects_rank_deficient_angles(scale):
    # quarter-turn spacing collapses sin(2 beta) to zero: rank 2
    betas = [0.0, math.pi / 2.0, math.pi, 3.0 * math.pi / 2.0]
    samples = synthesize_residual(scale, scale.a0, 0.0, betas)
    with pytest.raises(IllConditionedError, match="distinct angle"):
        fit_quadratures(samples, scale)
    same = synthesize_residual(scale, scale.a0, 0.0, [0.4, 0.4, 0.4, 0.4])
    with pytest.raises(IllConditionedError):
        fit_quadratures(same, scale)


def test_fit_report_keys(scale):
    samples = synthesize_residual(scale, scale.a0, 1e-3 * scale.a0, uniform_betas(16))
    report = fit_report(fit_quadratures(samples, scale))
    assert list(report) == [
        "a_const_si",
        "a_c_si",
        "a_s_si",
        "a_s_microgal",
        "chi_hat",
        "residual_rms_si",
        "condition",
        "n_samples",
    ]
    assert report["a_s_microgal"] == pytest.approx(report["a_s_si"] * 1e8, rel=1e-14)
    text = json.dumps(report)
    assert json.loads(text)["chi_hat"] == report["chi_hat"]


# ------------------------------------------------------------ sample CSV


def test_samples_csv_round_trip(tmp_path, scale):
    path = tmp_path / "samples.csv"
    samples = synthesize_residual(scale, scale.a0, 0.2 * scale.a0, uniform_betas(18), noise_sigma=1e-9, seed=3)
    write_samples_csv(path, samples)
    back = read_samples_csv(path)
    assert len(back) == len(samples)
    for orig, redo in zip(samples, back):
        assert redo.beta == pytest.approx(orig.beta, rel=1e-15, abs=1e-15)
        assert redo.accel == orig.accel
        assert redo.sigma == orig.sigma


def test_samples_csv_without_sigma(tmp_path):
    path = tmp_path / "samples.csv"
    path.write_text("# comment line\nbeta_deg,accel_si\n0.0,1.0e-7\n45.0,2.0e-7\n")
    samples = read_samples_csv(path)
    assert [smp.sigma for smp in samples] == [None, None]
    assert samples[1].beta == pytest.approx(math.pi / 4.0, rel=1e-15)


def test_samples_csv_errors_carry_line_numbers(tmp_path):
    bad_header = tmp_path / "a.csv"
    bad_header.write_text("angle,accel\n0,1\n")
    with pytest.raises(SampleFormatError, match=r":1: header"):
        read_samples_csv(bad_header)

    bad_cell = tmp_path / "b.csv"
    bad_cell.write_text("beta_deg,accel_si\n0.0,1e-7\nforty-five,2e-7\n")
    with pytest.raises(SampleFormatError, match=r":3: non-numeric"):
        read_samples_csv(bad_cell)

    bad_columns = tmp_path / "c.csv"
    bad_columns.write_text("beta_deg,accel_si\n0.0,1e-7,9\n")
    with pytest.raises(SampleFormatError, match=r":2: expected 2 columns"):
        read_samples_csv(bad_columns)

    empty = tmp_path / "d.csv"
    empty.write_text("")
    with pytest.raises(SampleFormatError, match="empty"):
        read_samples_csv(empty)

    negative_sigma = tmp_path / "e.csv"
    negative_sigma.write_text("beta_deg,accel_si,sigma_si\n0.0,1e-7,-1e-9\n")
    with pytest.raises(SampleFormatError, match=r":2: sigma_si"):
        read_samples_csv(negative_sigma)


def test_sample_sigma_validation():
    with pytest.raises(ValueError):
        AngularSample(beta=0.0, accel=0.0, sigma=-1.0)
