# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           model/api.py
# DESCRIPTION:    API for physical parameters, coefficients and validation reports
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

"""cavityspin - API for physical parameters, coefficients and validation reports

Two parameter families exist:

- `ModelParams` drives the five-level scheme with four cavity couplings and four lasers, which
  reduces to the spin-1 XY chain.
- `ZzParams` drives the two-laser scheme, which reduces to the S_z S_z chain.
"""

from __future__ import annotations
from typing import Dict, Iterator, Optional, Tuple
import math
from dataclasses import dataclass, field, asdict
from firebird.base.config import Config, FloatOption, IntOption, EnumOption
from cavityspin.base import Error, ModelError, Boundary, CheckStatus, ValidationFailed

#: Default "≫" warn threshold
DEFAULT_WARN_RATIO: float = 2.0
#: Default "≫" fail threshold
DEFAULT_FAIL_RATIO: float = 1.0
#: Default relative tolerance for design equalities
DEFAULT_EQUALITY_RTOL: float = 1e-9
#: Default upper bound for hopping over resolvent denominator
DEFAULT_HOPPING_RATIO_MAX: float = 0.5

def _check_structure(n_sites: int, detunings: Dict[str, float], values: Dict[str, float]) -> None:
    if not isinstance(n_sites, int) or isinstance(n_sites, bool) or n_sites < 1:
        raise ModelError(f"Chain length must be integer >= 1, got {n_sites!r}")
    for key, value in {**detunings, **values}.items():
        if not math.isfinite(value):
            raise ModelError(f"Parameter '{key}' must be finite, got {value!r}")
    for key, value in detunings.items():
        if value == 0.0:
            raise ModelError(f"Detuning '{key}' must be nonzero")

# Parameters

@dataclass(frozen=True)
class ModelParams:
    """Parameters of the five-level scheme (all in units of g₁).

    Arguments:
        g1, g2, g3, g4: Cavity coupling strengths.
        om1, om2, om3, om4: Laser Rabi frequencies.
        d1, d2, d3, d4: Detunings (nonzero).
        j_hop: Inter-cavity photon hopping rate.
        n_sites: Chain length.
        boundary: Chain boundary condition.

    Raises:
        ModelError: When parameters are structurally invalid.
    """
    g1: float
    g2: float
    g3: float
    g4: float
    om1: float
    om2: float
    om3: float
    om4: float
    d1: float
    d2: float
    d3: float
    d4: float
    j_hop: float
    n_sites: int = 2
    boundary: Boundary = Boundary.OPEN
    def __post_init__(self):
        _check_structure(self.n_sites, {'d1': self.d1, 'd2': self.d2, 'd3': self.d3, 'd4': self.d4},
                         {'g1': self.g1, 'g2': self.g2, 'g3': self.g3, 'g4': self.g4,
                          'om1': self.om1, 'om2': self.om2, 'om3': self.om3, 'om4': self.om4,
                          'j_hop': self.j_hop})
        if not isinstance(self.boundary, Boundary):
            raise ModelError(f"Unknown boundary '{self.boundary}'")
    def as_dict(self) -> Dict:
        "Returns parameters as plain dictionary."
        result = asdict(self)
        result['boundary'] = self.boundary.value
        return result

@dataclass(frozen=True)
class ZzParams:
    """Parameters of the two-laser S_z S_z scheme (all in units of g₁).

    Raises:
        ModelError: When parameters are structurally invalid.
    """
    g1: float
    g4: float
    om2: float
    om3: float
    d1p: float
    d3p: float
    j_hop: float
    n_sites: int = 2
    boundary: Boundary = Boundary.OPEN
    def __post_init__(self):
        _check_structure(self.n_sites, {'d1p': self.d1p, 'd3p': self.d3p},
                         {'g1': self.g1, 'g4': self.g4, 'om2': self.om2, 'om3': self.om3,
                          'j_hop': self.j_hop})
        if not isinstance(self.boundary, Boundary):
            raise ModelError(f"Unknown boundary '{self.boundary}'")
    def as_dict(self) -> Dict:
        "Returns parameters as plain dictionary."
        result = asdict(self)
        result['boundary'] = self.boundary.value
        return result

#: Reference parameter set of the built-in two-site scenarios
FIG2_PARAMS: ModelParams = ModelParams(g1=1.0, g2=1.0, g3=0.5, g4=1.0,
                                       om1=10.0, om2=10.0, om3=10.0, om4=5.0,
                                       d1=40.0, d2=80.0, d3=20.0, d4=40.0,
                                       j_hop=0.5, n_sites=2, boundary=Boundary.OPEN)

# Coefficients

@dataclass(frozen=True)
class XyCoefficients:
    """Coefficients of the effective spin-1 XY chain.
    """
    #: On-site S_x²+S_y² coefficient
    a_coef: float
    #: On-site S_z coefficient
    b_coef: float
    #: Nearest-neighbour exchange coefficient
    c_coef: float
    #: Resolvent denominator of the a↔b Raman channel
    mu_plus: float
    #: Resolvent denominator of the b↔c Raman channel
    mu_minus: float
    def effective_rate(self, n_sites: int, boundary: Boundary) -> float:
        """Returns the exchange rate seen by single link of the chain.

        For N=2 the periodic chain counts its single link twice.
        """
        if n_sites == 2 and boundary is Boundary.PERIODIC:
            return 2.0 * self.c_coef
        return self.c_coef
    def as_dict(self) -> Dict[str, float]:
        "Returns coefficients as plain dictionary."
        return asdict(self)

@dataclass(frozen=True)
class ZzCoefficients:
    """Coefficients of the effective S_z S_z chain.
    """
    u_coef: float
    alpha: float
    beta: float
    def as_dict(self) -> Dict[str, float]:
        "Returns coefficients as plain dictionary."
        return asdict(self)

# Validation

@dataclass(frozen=True)
class ValidationThresholds:
    """Thresholds used to grade regime checks.

    Ratio checks below `fail_ratio` fail, below `warn_ratio` warn. Equalities fail when the
    residual exceeds `equality_rtol` relative to the larger side. The hopping expansion ratio
    only warns above `hopping_ratio_max`.
    """
    warn_ratio: float = DEFAULT_WARN_RATIO
    fail_ratio: float = DEFAULT_FAIL_RATIO
    equality_rtol: float = DEFAULT_EQUALITY_RTOL
    hopping_ratio_max: float = DEFAULT_HOPPING_RATIO_MAX
    def __post_init__(self):
        if self.fail_ratio > self.warn_ratio:
            raise ModelError("Fail ratio threshold must not exceed warn threshold")
        if self.equality_rtol <= 0.0:
            raise ModelError("Equality tolerance must be positive")

@dataclass(frozen=True)
class CheckResult:
    """Result of single validation check.

    For equalities `value` is the absolute residual and `threshold` the absolute tolerance,
    for "≫" checks `value` is the ratio and `threshold` the warn threshold.
    """
    name: str
    kind: str
    value: float
    threshold: float
    status: CheckStatus
    description: str = ''

@dataclass(frozen=True)
class ValidationReport:
    """Ordered list of regime checks with aggregated status.
    """
    checks: Tuple[CheckResult, ...] = field(default_factory=tuple)
    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.checks)
    def __len__(self) -> int:
        return len(self.checks)
    def get(self, name: str) -> Optional[CheckResult]:
        """Returns check with specified name, or None.
        """
        for check in self.checks:
            if check.name == name:
                return check
        return None
    def raise_on_fail(self) -> None:
        """Raises `ValidationFailed` when overall status is FAIL.
        """
        if self.overall is CheckStatus.FAIL:
            failed = ', '.join(c.name for c in self.checks if c.status is CheckStatus.FAIL)
            raise ValidationFailed(f"Parameter validation failed: {failed}", report=self)
    def format(self) -> str:
        """Returns report as plain text table, one check per line followed by overall status.
        """
        lines = [f"{c.name:<20} {c.kind:<9} {c.value:>12.6g} {c.threshold:>10.3g}  {c.status.name}"
                 for c in self.checks]
        lines.append(f"overall: {self.overall.name}")
        return '\n'.join(lines)
    def as_dict(self) -> Dict:
        "Returns report as plain dictionary."
        return {'overall': self.overall.name.lower(),
                'checks': [{'name': c.name, 'kind': c.kind, 'value': c.value,
                            'threshold': c.threshold, 'status': c.status.name.lower()}
                           for c in self.checks]}
    @property
    def overall(self) -> CheckStatus:
        "Worst status over all checks."
        if not self.checks:
            return CheckStatus.PASS
        return max((c.status for c in self.checks), key=lambda s: s.severity)

# Configuration

class XyParamsConfig(Config):
    """Parameters of the five-level scheme, in units of g₁.
    """
    def __init__(self, name: str):
        super().__init__(name)
        #: Cavity coupling on a↔d
        self.g1: FloatOption = FloatOption('g1', "Cavity coupling on a<->d", required=True, default=1.0)
        #: Cavity coupling on b↔d
        self.g2: FloatOption = FloatOption('g2', "Cavity coupling on b<->d", required=True)
        #: Cavity coupling on b↔e
        self.g3: FloatOption = FloatOption('g3', "Cavity coupling on b<->e", required=True)
        #: Cavity coupling on c↔e
        self.g4: FloatOption = FloatOption('g4', "Cavity coupling on c<->e", required=True)
        #: Laser Rabi frequency on b↔d
        self.om1: FloatOption = FloatOption('om1', "Rabi frequency on b<->d", required=True)
        #: Laser Rabi frequency on a↔d
        self.om2: FloatOption = FloatOption('om2', "Rabi frequency on a<->d", required=True)
        #: Laser Rabi frequency on c↔e
        self.om3: FloatOption = FloatOption('om3', "Rabi frequency on c<->e", required=True)
        #: Laser Rabi frequency on b↔e
        self.om4: FloatOption = FloatOption('om4', "Rabi frequency on b<->e", required=True)
        #: Detuning of the first Raman pair
        self.d1: FloatOption = FloatOption('d1', "Detuning of g1/Om1 pair", required=True)
        #: Detuning of the second Raman pair
        self.d2: FloatOption = FloatOption('d2', "Detuning of g2/Om2 pair", required=True)
        #: Detuning of the third Raman pair
        self.d3: FloatOption = FloatOption('d3', "Detuning of g3/Om3 pair", required=True)
        #: Detuning of the fourth Raman pair
        self.d4: FloatOption = FloatOption('d4', "Detuning of g4/Om4 pair", required=True)
        #: Photon hopping rate
        self.j_hop: FloatOption = FloatOption('j_hop', "Photon hopping rate", required=True)
        #: Chain length
        self.n_sites: IntOption = IntOption('n_sites', "Chain length", required=True, default=2)
        #: Chain boundary condition
        self.boundary: EnumOption = EnumOption('boundary', Boundary, "Chain boundary condition",
                                               required=True, default=Boundary.OPEN)
    def validate(self) -> None:
        """Extended validation.

        - `n_sites` must be at least 1.
        - All detunings must be nonzero.
        """
        super().validate()
        if self.n_sites.value < 1:
            raise Error("Option 'n_sites' must be at least 1")
        for opt in (self.d1, self.d2, self.d3, self.d4):
            if opt.value == 0.0:
                raise Error(f"Detuning '{opt.name}' must be nonzero")
    def to_params(self) -> ModelParams:
        """Returns `ModelParams` built from option values.
        """
        return ModelParams(g1=self.g1.value, g2=self.g2.value, g3=self.g3.value, g4=self.g4.value,
                           om1=self.om1.value, om2=self.om2.value, om3=self.om3.value,
                           om4=self.om4.value, d1=self.d1.value, d2=self.d2.value,
                           d3=self.d3.value, d4=self.d4.value, j_hop=self.j_hop.value,
                           n_sites=self.n_sites.value, boundary=self.boundary.value)

class ZzParamsConfig(Config):
    """Parameters of the two-laser S_z S_z scheme, in units of g₁.
    """
    def __init__(self, name: str):
        super().__init__(name)
        #: Cavity coupling on a↔d
        self.g1: FloatOption = FloatOption('g1', "Cavity coupling on a<->d", required=True, default=1.0)
        #: Cavity coupling on c↔e
        self.g4: FloatOption = FloatOption('g4', "Cavity coupling on c<->e", required=True)
        #: Laser Rabi frequency on a↔d
        self.om2: FloatOption = FloatOption('om2', "Rabi frequency on a<->d", required=True)
        #: Laser Rabi frequency on c↔e
        self.om3: FloatOption = FloatOption('om3', "Rabi frequency on c<->e", required=True)
        #: Detuning of the a↔d pair
        self.d1p: FloatOption = FloatOption('d1p', "Detuning of a<->d pair", required=True)
        #: Detuning of the c↔e pair
        self.d3p: FloatOption = FloatOption('d3p', "Detuning of c<->e pair", required=True)
        #: Photon hopping rate
        self.j_hop: FloatOption = FloatOption('j_hop', "Photon hopping rate", required=True)
        #: Chain length
        self.n_sites: IntOption = IntOption('n_sites', "Chain length", required=True, default=2)
        #: Chain boundary condition
        self.boundary: EnumOption = EnumOption('boundary', Boundary, "Chain boundary condition",
                                               required=True, default=Boundary.OPEN)
    def validate(self) -> None:
        """Extended validation.

        - `n_sites` must be at least 1.
        - Both detunings must be nonzero.
        """
        super().validate()
        if self.n_sites.value < 1:
            raise Error("Option 'n_sites' must be at least 1")
        for opt in (self.d1p, self.d3p):
            if opt.value == 0.0:
                raise Error(f"Detuning '{opt.name}' must be nonzero")
    def to_params(self) -> ZzParams:
        """Returns `ZzParams` built from option values.
        """
        return ZzParams(g1=self.g1.value, g4=self.g4.value, om2=self.om2.value, om3=self.om3.value,
                        d1p=self.d1p.value, d3p=self.d3p.value, j_hop=self.j_hop.value,
                        n_sites=self.n_sites.value, boundary=self.boundary.value)

class ThresholdsConfig(Config):
    """Validation thresholds.
    """
    def __init__(self, name: str):
        super().__init__(name)
        #: Ratio below which a "≫" check warns
        self.warn_ratio: FloatOption = \
            FloatOption('warn_ratio', "Ratio below which a '>>' check warns", required=True,
                        default=DEFAULT_WARN_RATIO)
        #: Ratio below which a "≫" check fails
        self.fail_ratio: FloatOption = \
            FloatOption('fail_ratio', "Ratio below which a '>>' check fails", required=True,
                        default=DEFAULT_FAIL_RATIO)
        #: Relative tolerance for design equalities
        self.equality_rtol: FloatOption = \
            FloatOption('equality_rtol', "Relative tolerance for design equalities", required=True,
                        default=DEFAULT_EQUALITY_RTOL)
        #: Upper bound of J/|mu|
        self.hopping_ratio_max: FloatOption = \
            FloatOption('hopping_ratio_max', "Upper bound of J/|mu| (warn only)", required=True,
                        default=DEFAULT_HOPPING_RATIO_MAX)
    def validate(self) -> None:
        """Extended validation.

        - `fail_ratio` must not exceed `warn_ratio`.
        - `equality_rtol` must be positive.
        """
        super().validate()
        if self.fail_ratio.value > self.warn_ratio.value:
            raise Error("Option 'fail_ratio' must not exceed 'warn_ratio'")
        if self.equality_rtol.value <= 0.0:
            raise Error("Option 'equality_rtol' must be positive")
    def to_thresholds(self) -> ValidationThresholds:
        """Returns `ValidationThresholds` built from option values.
        """
        return ValidationThresholds(warn_ratio=self.warn_ratio.value, fail_ratio=self.fail_ratio.value,
                                    equality_rtol=self.equality_rtol.value,
                                    hopping_ratio_max=self.hopping_ratio_max.value)
