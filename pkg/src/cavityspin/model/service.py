# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           model/service.py
# DESCRIPTION:    Regime validation and closed-form effective coefficients
# CREATED:        12.03.2024
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

"""cavityspin - Regime validation and closed-form effective coefficients
"""

from __future__ import annotations
from typing import List, Optional
import math
import numpy as np
from cavityspin.base import SingularRegimeError, CheckStatus
from cavityspin.model.api import (ModelParams, ZzParams, XyCoefficients, ZzCoefficients,
                                  ValidationThresholds, ValidationReport, CheckResult)

SQRT2 = math.sqrt(2.0)

def _ratio(numerator: float, denominator: float) -> float:
    if denominator == 0.0:
        return math.inf
    return numerator / denominator

def _equality(name: str, lhs: float, rhs: float, thresholds: ValidationThresholds,
              description: str) -> CheckResult:
    residual = abs(lhs - rhs)
    tolerance = thresholds.equality_rtol * max(abs(lhs), abs(rhs))
    status = CheckStatus.PASS if residual <= tolerance else CheckStatus.FAIL
    return CheckResult(name, 'equality', residual, tolerance, status, description)

def _much_greater(name: str, ratio: float, thresholds: ValidationThresholds,
                  description: str) -> CheckResult:
    if ratio < thresholds.fail_ratio:
        status = CheckStatus.FAIL
    elif ratio < thresholds.warn_ratio:
        status = CheckStatus.WARN
    else:
        status = CheckStatus.PASS
    return CheckResult(name, 'ratio', ratio, thresholds.warn_ratio, status, description)

def _ceiling(name: str, ratio: float, limit: float, description: str) -> CheckResult:
    status = CheckStatus.WARN if ratio > limit else CheckStatus.PASS
    return CheckResult(name, 'ceiling', ratio, limit, status, description)

def mode_frequencies(n_sites: int, j_hop: float) -> List[float]:
    """Returns eigenfrequencies ν_k = 2J cos(2πk/N), k = 1..N, of the photon hopping ring.

    Arguments:
        n_sites: Chain length N.
        j_hop: Hopping rate J.
    """
    k = np.arange(1, n_sites + 1)
    return list(2.0 * j_hop * np.cos(2.0 * np.pi * k / n_sites))

def _mu_pair(p: ModelParams):
    base = p.g1 ** 2 / p.d1
    split = 0.5 * (p.om2 ** 2 / p.d2 - p.om3 ** 2 / p.d3)
    return base + split, base - split

def compute_xy_coefficients(p: ModelParams) -> XyCoefficients:
    """Computes A, B, C and μ± of the effective spin-1 XY chain.

    Arguments:
        p: Parameters of the five-level scheme.

    Raises:
        SingularRegimeError: When μ₊ or μ₋ is zero.
    """
    mu_plus, mu_minus = _mu_pair(p)
    if mu_plus == 0.0 or mu_minus == 0.0:
        raise SingularRegimeError(f"Resolvent denominator vanishes (mu+={mu_plus}, mu-={mu_minus})")
    # x1 carries the a<->b Raman channel, x2 the b<->c one
    x1 = p.om1 ** 2 * p.g1 ** 2 / p.d1 ** 2
    x2 = p.om2 ** 2 * p.g2 ** 2 / p.d2 ** 2
    a_coef = x1 / (2.0 * mu_plus) + x2 / (2.0 * mu_minus)
    b_coef = x2 / (2.0 * mu_minus) - x1 / (2.0 * mu_plus)
    c_coef = x1 * p.j_hop / mu_plus ** 2 + x2 * p.j_hop / mu_minus ** 2
    return XyCoefficients(a_coef=a_coef, b_coef=b_coef, c_coef=c_coef, mu_plus=mu_plus,
                          mu_minus=mu_minus)

def compute_zz_coefficients(p: ZzParams) -> ZzCoefficients:
    """Computes u, α and β of the effective S_z S_z chain.

    Arguments:
        p: Parameters of the two-laser scheme.

    Raises:
        SingularRegimeError: When u = g₁²/Δ₁′ is zero.
    """
    u_coef = p.g1 ** 2 / p.d1p
    if u_coef == 0.0:
        raise SingularRegimeError("Photon Stark shift u vanishes")
    drive = p.om2 ** 2 * p.g1 ** 2 / p.d1p ** 2
    alpha = drive / u_coef
    beta = 2.0 * p.j_hop * drive / u_coef ** 2
    return ZzCoefficients(u_coef=u_coef, alpha=alpha, beta=beta)

def validate_xy_params(p: ModelParams, thresholds: Optional[ValidationThresholds]=None) -> ValidationReport:
    """Grades every regime condition the five-level scheme relies on.

    Arguments:
        p: Parameters to validate.
        thresholds: Grading thresholds, defaults when not specified.

    Checks, in report order:

    - `stark_match_b`, `stark_match_c`: photon Stark shifts equal on all three ground levels.
    - `laser_balance`, `raman_match_13`, `raman_match_24`: laser balance conditions.
    - `large_detuning`: min |Δᵢ| / max(|gᵢ|, |Ωᵢ|).
    - `ladder_21`, `ladder_43`: detuning differences over the largest two-photon couplings.
    - `second_elimination`: min_k |μ± − ν_k| over the largest Raman coupling / √2.
    - `hopping_expansion`: J / min |μ±| (upper bound, warn only).

    Raises:
        ModelError: When parameters are structurally invalid.
    """
    if thresholds is None:
        thresholds = ValidationThresholds()
    checks = []
    stark = p.g1 ** 2 / p.d1
    checks.append(_equality('stark_match_b', stark, p.g2 ** 2 / p.d2 + p.g3 ** 2 / p.d3, thresholds,
                            "g1^2/d1 = g2^2/d2 + g3^2/d3"))
    checks.append(_equality('stark_match_c', stark, p.g4 ** 2 / p.d4, thresholds,
                            "g1^2/d1 = g4^2/d4"))
    checks.append(_equality('laser_balance', p.om1 ** 2 / p.d1 + p.om4 ** 2 / p.d4,
                            0.5 * (p.om2 ** 2 / p.d2 + p.om3 ** 2 / p.d3), thresholds,
                            "om1^2/d1 + om4^2/d4 = (om2^2/d2 + om3^2/d3)/2"))
    checks.append(_equality('raman_match_13', p.om1 * p.g1 / p.d1, p.om3 * p.g3 / p.d3, thresholds,
                            "om1 g1/d1 = om3 g3/d3"))
    checks.append(_equality('raman_match_24', p.om2 * p.g2 / p.d2, p.om4 * p.g4 / p.d4, thresholds,
                            "om2 g2/d2 = om4 g4/d4"))
    detuning = min(_ratio(abs(d), max(abs(g), abs(om)))
                   for d, g, om in ((p.d1, p.g1, p.om1), (p.d2, p.g2, p.om2),
                                    (p.d3, p.g3, p.om3), (p.d4, p.g4, p.om4)))
    checks.append(_much_greater('large_detuning', detuning, thresholds, "|d_i| >> |g_i|, |om_i|"))
    ladder_21 = max(abs(p.om1 * p.om2), abs(p.om1 * p.g2), abs(p.g1 * p.om2), abs(p.g1 * p.g2)) / abs(p.d1)
    checks.append(_much_greater('ladder_21', _ratio(p.d2 - p.d1, ladder_21), thresholds,
                                "d2 - d1 >> two-photon couplings via d"))
    ladder_43 = max(abs(p.om3 * p.om4), abs(p.om3 * p.g4), abs(p.g3 * p.om4), abs(p.g3 * p.g4)) / abs(p.d3)
    checks.append(_much_greater('ladder_43', _ratio(p.d4 - p.d3, ladder_43), thresholds,
                                "d4 - d3 >> two-photon couplings via e"))
    mu_plus, mu_minus = _mu_pair(p)
    nus = mode_frequencies(p.n_sites, p.j_hop)
    gap = min(abs(mu - nu) for mu in (mu_plus, mu_minus) for nu in nus)
    raman = max(abs(p.om1 * p.g1 / (SQRT2 * p.d1)), abs(p.om2 * p.g2 / (SQRT2 * p.d2)))
    checks.append(_much_greater('second_elimination', _ratio(gap, raman), thresholds,
                                "|mu -/+ nu_k| >> Raman couplings"))
    checks.append(_ceiling('hopping_expansion', _ratio(abs(p.j_hop), min(abs(mu_plus), abs(mu_minus))),
                           thresholds.hopping_ratio_max, "J < |mu -/+|"))
    return ValidationReport(tuple(checks))

def validate_zz_params(p: ZzParams, thresholds: Optional[ValidationThresholds]=None) -> ValidationReport:
    """Grades every regime condition the two-laser scheme relies on.

    Arguments:
        p: Parameters to validate.
        thresholds: Grading thresholds, defaults when not specified.

    Checks, in report order:

    - `stark_match`: g₁²/Δ₁′ = g₄²/Δ₃′.
    - `drive_match`: Ω₃g₄/Δ₃′ = −Ω₂g₁/Δ₁′.
    - `large_detuning`: min |Δ′| / max(|g₁|, |g₄|, |Ω₂|, |Ω₃|, |J|).
    - `second_elimination`: min_k |u − ν_k| / |Ω₂g₁/Δ₁′|.

    Raises:
        ModelError: When parameters are structurally invalid.
    """
    if thresholds is None:
        thresholds = ValidationThresholds()
    u_coef = p.g1 ** 2 / p.d1p
    checks = [_equality('stark_match', u_coef, p.g4 ** 2 / p.d3p, thresholds, "g1^2/d1' = g4^2/d3'"),
              _equality('drive_match', p.om3 * p.g4 / p.d3p, -p.om2 * p.g1 / p.d1p, thresholds,
                        "om3 g4/d3' = -om2 g1/d1'")]
    scale = max(abs(p.g1), abs(p.g4), abs(p.om2), abs(p.om3), abs(p.j_hop))
    checks.append(_much_greater('large_detuning', _ratio(min(abs(p.d1p), abs(p.d3p)), scale), thresholds,
                                "|d'| >> g, om, J"))
    gap = min(abs(u_coef - nu) for nu in mode_frequencies(p.n_sites, p.j_hop))
    checks.append(_much_greater('second_elimination', _ratio(gap, abs(p.om2 * p.g1 / p.d1p)), thresholds,
                                "|u - nu_k| >> |om2 g1/d1'|"))
    return ValidationReport(tuple(checks))
