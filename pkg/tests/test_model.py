# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           tests/test_model.py
# DESCRIPTION:    Tests for parameters, coefficients and validation
# CREATED:        22.03.2024
#
# The contents of this file are subject to the MIT License
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#
# Copyright (c) 2024 The cavityspin developers
# All Rights Reserved.
#
# Contributor(s): ______________________________________.

from __future__ import annotations
import math
from configparser import ConfigParser
from dataclasses import replace
import numpy as np
import pytest
from firebird.base.config import EnvExtendedInterpolation
from cavityspin.base import Error, ModelError, SingularRegimeError, ValidationFailed, Boundary, CheckStatus
from cavityspin.model.api import (FIG2_PARAMS, ModelParams, ZzParams, ValidationThresholds, XyParamsConfig,
                                  ZzParamsConfig, ThresholdsConfig)
from cavityspin.model.service import (mode_frequencies, compute_xy_coefficients, compute_zz_coefficients,
                                      validate_xy_params, validate_zz_params)

FIG2_INI = """
[params]
g1 = 1.0
g2 = 1.0
g3 = 0.5
g4 = 1.0
om1 = 10.0
om2 = 10.0
om3 = 10.0
om4 = 5.0
d1 = 40.0
d2 = 80.0
d3 = 20.0
d4 = 40.0
j_hop = 0.5
n_sites = 2
boundary = open
"""

def test_reported_coefficients(fig2_coefficients):
    assert fig2_coefficients.a_coef == pytest.approx(-0.0128, abs=1e-4)
    assert fig2_coefficients.b_coef == pytest.approx(0.0210, abs=1e-4)
    assert fig2_coefficients.c_coef == pytest.approx(0.0113, abs=1e-4)
    assert fig2_coefficients.mu_plus == pytest.approx(-1.85)
    assert fig2_coefficients.mu_minus == pytest.approx(1.90)

def test_effective_rate(fig2_coefficients):
    c = fig2_coefficients.c_coef
    assert fig2_coefficients.effective_rate(2, Boundary.OPEN) == c
    assert fig2_coefficients.effective_rate(2, Boundary.PERIODIC) == 2.0 * c
    assert fig2_coefficients.effective_rate(4, Boundary.PERIODIC) == c

def test_singular_regime(fig2_params):
    # g1^2/d1 = 0.025 cancels -(om2^2/d2)/2 with om3 = 0
    params = replace(fig2_params, om2=1.0, d2=-20.0, om3=0.0)
    with pytest.raises(SingularRegimeError):
        compute_xy_coefficients(params)

def test_structural_errors(fig2_params):
    with pytest.raises(ModelError, match="d3"):
        replace(fig2_params, d3=0.0)
    with pytest.raises(ModelError):
        replace(fig2_params, n_sites=0)
    with pytest.raises(ModelError):
        replace(fig2_params, j_hop=math.inf)
    with pytest.raises(ModelError):
        replace(fig2_params, boundary='open')

def test_mode_frequencies():
    assert mode_frequencies(2, 0.5) == pytest.approx([-1.0, 1.0])
    assert mode_frequencies(1, 0.5) == pytest.approx([1.0])
    assert mode_frequencies(4, 1.0) == pytest.approx([0.0, -2.0, 0.0, 2.0], abs=1e-12)

def test_fig2_validation(fig2_params):
    report = validate_xy_params(fig2_params)
    assert [c.name for c in report] == ['stark_match_b', 'stark_match_c', 'laser_balance',
                                        'raman_match_13', 'raman_match_24', 'large_detuning',
                                        'ladder_21', 'ladder_43', 'second_elimination',
                                        'hopping_expansion']
    assert report.overall is not CheckStatus.FAIL
    for name in ('stark_match_b', 'stark_match_c', 'laser_balance', 'raman_match_13', 'raman_match_24'):
        check = report.get(name)
        assert check.status is CheckStatus.PASS
        assert check.value < 1e-12
    assert report.get('second_elimination').value == pytest.approx(4.808, rel=0.05)
    assert report.get('ladder_43').value == pytest.approx(8.0, rel=0.05)
    assert report.get('ladder_21').value == pytest.approx(16.0, rel=0.05)
    assert report.get('hopping_expansion').value == pytest.approx(0.27, rel=0.05)
    assert report.get('hopping_expansion').status is CheckStatus.PASS
    assert report.get('missing') is None
    report.raise_on_fail()
    text = report.format().splitlines()
    assert len(text) == len(report) + 1
    assert text[0].startswith('stark_match_b')
    assert text[-1] == f"overall: {report.overall.name}"

def test_validation_grading(fig2_params):
    strict = ValidationThresholds(warn_ratio=8.0, fail_ratio=1.0)
    assert validate_xy_params(fig2_params, strict).get('large_detuning').status is CheckStatus.WARN
    broken = replace(fig2_params, d1=5.0)
    report = validate_xy_params(broken)
    assert report.get('large_detuning').status is CheckStatus.FAIL
    assert report.get('stark_match_b').status is CheckStatus.FAIL
    assert report.overall is CheckStatus.FAIL
    with pytest.raises(ValidationFailed) as exc_info:
        report.raise_on_fail()
    assert exc_info.value.report is report
    data = report.as_dict()
    assert data['overall'] == 'fail'
    assert len(data['checks']) == len(report)

def test_hopping_ceiling_only_warns(fig2_params):
    report = validate_xy_params(replace(fig2_params, j_hop=1.5))
    assert report.get('hopping_expansion').status is CheckStatus.WARN

def test_equality_of_zeros(fig2_params):
    # All Raman amplitudes zero: both sides vanish
    report = validate_xy_params(replace(fig2_params, om1=0.0, om3=0.0))
    assert report.get('raman_match_13').status is CheckStatus.PASS

def test_thresholds():
    with pytest.raises(ModelError):
        ValidationThresholds(warn_ratio=1.0, fail_ratio=2.0)
    with pytest.raises(ModelError):
        ValidationThresholds(equality_rtol=0.0)

def test_zz_coefficients(zz_params):
    coefs = compute_zz_coefficients(zz_params)
    assert coefs.u_coef == pytest.approx(0.025)
    assert coefs.alpha == pytest.approx(2.5)
    assert coefs.beta == pytest.approx(2.0 * 0.5 * 0.0625 / 0.025 ** 2)

def test_zz_validation(zz_params):
    report = validate_zz_params(zz_params)
    assert [c.name for c in report] == ['stark_match', 'drive_match', 'large_detuning', 'second_elimination']
    assert report.overall is CheckStatus.PASS
    report = validate_zz_params(replace(zz_params, om3=10.0))
    assert report.get('drive_match').status is CheckStatus.FAIL

def test_params_config():
    parser = ConfigParser(interpolation=EnvExtendedInterpolation())
    parser.read_string(FIG2_INI)
    cfg = XyParamsConfig('params')
    cfg.load_config(parser)
    cfg.validate()
    assert cfg.to_params() == FIG2_PARAMS
    parser['params']['boundary'] = 'PERIODIC'
    cfg.load_config(parser)
    assert cfg.to_params().boundary is Boundary.PERIODIC
    parser['params']['d2'] = '0'
    cfg.load_config(parser)
    with pytest.raises(Error, match="d2"):
        cfg.validate()

def test_env_interpolation(monkeypatch):
    monkeypatch.setenv('CAVITYSPIN_TEST_HOP', '0.25')
    parser = ConfigParser(interpolation=EnvExtendedInterpolation())
    parser.read_string(FIG2_INI.replace('j_hop = 0.5', 'j_hop = ${env:CAVITYSPIN_TEST_HOP}'))
    cfg = XyParamsConfig('params')
    cfg.load_config(parser)
    assert cfg.to_params().j_hop == 0.25

def test_zz_and_thresholds_config():
    parser = ConfigParser()
    parser.read_string("""
[zz]
g4 = 1.0
om2 = 10.0
om3 = -10.0
d1p = 40.0
d3p = 40.0
j_hop = 0.5

[limits]
warn_ratio = 1.0
fail_ratio = 3.0
""")
    zz = ZzParamsConfig('zz')
    zz.load_config(parser)
    zz.validate()
    params = zz.to_params()
    assert params.g1 == 1.0
    assert params.n_sites == 2
    limits = ThresholdsConfig('limits')
    limits.load_config(parser)
    with pytest.raises(Error, match="fail_ratio"):
        limits.validate()

def test_params_as_dict():
    data = FIG2_PARAMS.as_dict()
    assert data['boundary'] == 'open'
    assert ModelParams(**{**data, 'boundary': Boundary.OPEN}) == FIG2_PARAMS

def _random_params(rng: np.random.Generator, j_hop: float) -> ModelParams:
    def detuning() -> float:
        return float(rng.choice([-1.0, 1.0]) * rng.uniform(5.0, 100.0))
    return ModelParams(g1=1.0, g2=float(rng.uniform(0.2, 2.0)), g3=float(rng.uniform(0.2, 2.0)),
                       g4=float(rng.uniform(0.2, 2.0)), om1=float(rng.uniform(-10.0, 10.0)),
                       om2=float(rng.uniform(-10.0, 10.0)), om3=float(rng.uniform(-10.0, 10.0)),
                       om4=float(rng.uniform(-10.0, 10.0)), d1=detuning(), d2=detuning(), d3=detuning(),
                       d4=detuning(), j_hop=j_hop, n_sites=int(rng.integers(1, 6)))

def test_exchange_rate_is_antiferromagnetic():
    rng = np.random.default_rng(20240322)
    for _ in range(200):
        params = _random_params(rng, float(rng.uniform(0.01, 2.0)))
        assert compute_xy_coefficients(params).c_coef > 0.0

def test_recombination_identities():
    rng = np.random.default_rng(11)
    for _ in range(100):
        p = _random_params(rng, 0.5)
        coefs = compute_xy_coefficients(p)
        scale = 1e-12 * (abs(coefs.a_coef) + abs(coefs.b_coef))
        assert coefs.a_coef - coefs.b_coef == pytest.approx(p.om1 ** 2 * p.g1 ** 2 / (p.d1 ** 2 * coefs.mu_plus),
                                                            rel=1e-9, abs=scale)
        assert coefs.a_coef + coefs.b_coef == pytest.approx(p.om2 ** 2 * p.g2 ** 2 / (p.d2 ** 2 * coefs.mu_minus),
                                                            rel=1e-9, abs=scale)

def test_coefficients_vanish_without_raman_drive(fig2_params):
    coefs = compute_xy_coefficients(replace(fig2_params, om1=0.0, om2=0.0))
    assert (coefs.a_coef, coefs.b_coef, coefs.c_coef) == (0.0, 0.0, 0.0)

def test_zz_coefficient_ratio():
    rng = np.random.default_rng(5)
    for _ in range(100):
        d1p = float(rng.choice([-1.0, 1.0]) * rng.uniform(5.0, 100.0))
        p = ZzParams(g1=float(rng.uniform(0.2, 2.0)), g4=1.0, om2=float(rng.uniform(-10.0, 10.0)),
                     om3=float(rng.uniform(-10.0, 10.0)), d1p=d1p, d3p=40.0,
                     j_hop=float(rng.uniform(0.01, 2.0)))
        coefs = compute_zz_coefficients(p)
        assert coefs.beta == pytest.approx(coefs.alpha * 2.0 * p.j_hop / coefs.u_coef, rel=1e-12)

def test_zz_coefficients_without_drive_or_hopping(zz_params):
    assert compute_zz_coefficients(replace(zz_params, om2=0.0)).alpha == 0.0
    assert compute_zz_coefficients(replace(zz_params, om2=0.0)).beta == 0.0
    coefs = compute_zz_coefficients(replace(zz_params, j_hop=0.0))
    assert coefs.beta == 0.0
    assert coefs.alpha == compute_zz_coefficients(zz_params).alpha

@pytest.mark.parametrize('n_sites', [2, 3, 4, 7])
def test_mode_frequency_ring(n_sites):
    nus = mode_frequencies(n_sites, 0.8)
    shifted = 2.0 * 0.8 * np.cos(2.0 * np.pi * np.arange(n_sites + 1, 2 * n_sites + 1) / n_sites)
    assert np.allclose(nus, shifted, atol=1e-12)
    assert sum(nus) == pytest.approx(0.0, abs=1e-12)
    assert mode_frequencies(n_sites, 0.0) == [0.0] * n_sites

def test_stark_mismatch_residual(fig2_params):
    check = validate_xy_params(replace(fig2_params, g3=1.0)).get('stark_match_b')
    assert check.value == pytest.approx(0.0375, rel=1e-12)
    assert check.status is CheckStatus.FAIL

def test_symmetric_undriven_equalities():
    params = ModelParams(g1=1.0, g2=1.0, g3=1.0, g4=1.0, om1=0.0, om2=0.0, om3=0.0, om4=0.0,
                         d1=30.0, d2=60.0, d3=60.0, d4=30.0, j_hop=0.5)
    report = validate_xy_params(params)
    for name in ('stark_match_b', 'stark_match_c', 'laser_balance', 'raman_match_13', 'raman_match_24'):
        assert report.get(name).value < 1e-15
        assert report.get(name).status is CheckStatus.PASS

def test_zz_validation_examples(zz_params):
    check = validate_zz_params(replace(zz_params, d3p=20.0)).get('stark_match')
    assert check.value == pytest.approx(0.025, rel=1e-12)
    assert check.status is CheckStatus.FAIL
    report = validate_zz_params(replace(zz_params, om2=0.0, om3=0.0))
    assert report.get('drive_match').value == 0.0
    assert report.get('drive_match').status is CheckStatus.PASS
    assert report.get('second_elimination').value == math.inf
    assert report.get('second_elimination').status is CheckStatus.PASS
