# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           cli/api.py
# DESCRIPTION:    API for scenarios, run records and built-in recipes
# CREATED:        20.03.2024
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

"""cavityspin - API for scenarios, run records and built-in recipes

Scenarios are INI files. The `[scenario]` section selects models, the initial state and the
time grid; it names a parameter section (`params`) and optionally a `thresholds` and a
`propagator` section. All frequencies are in units of g₁, times in 1/g₁.
"""

from __future__ import annotations
from typing import Any, Dict, Optional, Union
from dataclasses import dataclass, field
from enum import Enum
import numpy as np
from firebird.base.config import (Config, StrOption, IntOption, FloatOption, BoolOption, EnumOption,
                                  ListOption)
from cavityspin.base import Error, ModelError
from cavityspin.hilbert.api import TruncationKind
from cavityspin.model.api import ModelParams, ZzParams, ValidationReport, ValidationThresholds
from cavityspin.dynamics.api import PropagatorConfig, TrotterOrder
from cavityspin.observables.api import TimeSeries, parse_channel

#: Environment variable overriding directory of output files
OUTPUT_DIR_ENV = 'CAVITYSPIN_OUTPUT_DIR'

class ParamFamily(Enum):
    """Parameter block family.
    """
    XY = 'xy'
    ZZ = 'zz'

class ModelKind(Enum):
    """Simulated model.
    """
    FULL_EQ1 = 'full-eq1'
    ELIMINATED_EQ2 = 'eliminated-eq2'
    SPIN_XY_EQ11 = 'spin-xy-eq11'
    ZZ_FULL_EQ13 = 'zz-full-eq13'
    ZZ_INTERMEDIATE_EQ14 = 'zz-intermediate-eq14'
    ZZ_EQ15 = 'zz-eq15'
    TROTTER_XY_ZZ = 'trotter-xy-zz'
    @property
    def family(self) -> ParamFamily:
        "Parameter family the model is built from."
        if self in (ModelKind.ZZ_FULL_EQ13, ModelKind.ZZ_INTERMEDIATE_EQ14, ModelKind.ZZ_EQ15):
            return ParamFamily.ZZ
        return ParamFamily.XY
    @property
    def suffix(self) -> str:
        "Channel suffix used when a scenario has several channel sources."
        return _SUFFIXES[self]

_SUFFIXES = {ModelKind.FULL_EQ1: 'eq1', ModelKind.ELIMINATED_EQ2: 'full', ModelKind.SPIN_XY_EQ11: 'eff',
             ModelKind.ZZ_FULL_EQ13: 'eq13', ModelKind.ZZ_INTERMEDIATE_EQ14: 'eq14', ModelKind.ZZ_EQ15: 'eq15',
             ModelKind.TROTTER_XY_ZZ: 'trotter'}

# Configuration

class ScenarioConfig(Config):
    """Scenario configuration.
    """
    def __init__(self, name: str='scenario'):
        super().__init__(name)
        #: Scenario description
        self.description: StrOption = StrOption('description', "Scenario description", default='')
        #: Simulated models
        self.models: ListOption = ListOption('models', str, "Simulated models", default=[])
        #: Parameter family, derived from models when not specified
        self.family: EnumOption = EnumOption('family', ParamFamily, "Parameter family (xy/zz)")
        #: Name of parameter section
        self.params: StrOption = StrOption('params', "Name of parameter section", required=True,
                                           default='params')
        #: Name of validation thresholds section
        self.thresholds: StrOption = StrOption('thresholds', "Name of validation thresholds section")
        #: Name of propagator section
        self.propagator: StrOption = StrOption('propagator', "Name of propagator section")
        #: Initial state specification
        self.initial_state: StrOption = \
            StrOption('initial_state', "Initial state ('b,c', 'b,c|1,0' or 'mixture:fig2b')",
                      required=True, default='b,c')
        #: Grid start
        self.t_start: FloatOption = FloatOption('t_start', "Grid start (1/g1)", required=True, default=0.0)
        #: Grid end
        self.t_end: FloatOption = FloatOption('t_end', "Grid end (1/g1)", required=True, default=600.0)
        #: Number of samples
        self.samples: IntOption = IntOption('samples', "Number of samples", required=True, default=600)
        #: Photon truncation rule
        self.truncation: EnumOption = \
            EnumOption('truncation', TruncationKind, "Photon truncation rule", required=True,
                       default=TruncationKind.TOTAL_CAP)
        #: Photon truncation cap
        self.photon_cap: IntOption = IntOption('photon_cap', "Photon truncation cap", required=True, default=2)
        #: Population channels
        self.channels: ListOption = ListOption('channels', str, "Population channels", required=True,
                                               default=['p_c2'])
        #: Output CSV file
        self.output: StrOption = StrOption('output', "Output CSV file")
        #: Run even when parameter validation fails
        self.allow_invalid: BoolOption = \
            BoolOption('allow_invalid', "Run even when parameter validation fails", required=True,
                       default=False)
        #: On-site coefficient of the product-formula S_z S_z part
        self.zz_alpha: FloatOption = FloatOption('zz_alpha', "Alpha of S_zS_z part for product formula")
        #: Coupling coefficient of the product-formula S_z S_z part
        self.zz_beta: FloatOption = FloatOption('zz_beta', "Beta of S_zS_z part for product formula")
        #: Product-formula periods per sample interval
        self.trotter_substeps: IntOption = \
            IntOption('trotter_substeps', "Product-formula periods per sample interval", required=True,
                      default=8)
        #: Order of factors in product formula
        self.trotter_order: EnumOption = \
            EnumOption('trotter_order', TrotterOrder, "Order of factors in product formula", required=True,
                       default=TrotterOrder.XY_FIRST)
        #: Step divisions of product-formula error scan
        self.sweep_divisions: ListOption = ListOption('sweep_divisions', int,
                                                      "Step divisions of product-formula error scan")
        #: Total time of error scan, 10/C when not specified
        self.sweep_time: FloatOption = FloatOption('sweep_time', "Total time of error scan (1/g1)")
    def validate(self) -> None:
        """Extended validation.

        - All `models` must be known and belong to one parameter family, matching `family`
          when it is specified.
        - Either `models` or `family` must be specified.
        - `t_end` must be after `t_start`, `samples` at least 2.
        - All `channels` must be valid population channel names without model suffix.
        - `trotter-xy-zz` requires `zz_alpha` and `zz_beta`.
        - `sweep_divisions` needs at least two values and `trotter-xy-zz` model.
        """
        super().validate()
        kinds = self.model_kinds()
        families = {kind.family for kind in kinds}
        if self.family.value is not None:
            families.add(self.family.value)
        if not families:
            raise Error("Either 'models' or 'family' must be specified")
        if len(families) > 1:
            raise Error("Models mix parameter families")
        if not self.t_end.value > self.t_start.value:
            raise Error("Option 't_end' must be after 't_start'")
        if self.samples.value < 2:
            raise Error("Option 'samples' must be at least 2")
        for channel in self.channels.value:
            try:
                _, _, suffix = parse_channel(channel)
            except ModelError as exc:
                raise Error(str(exc)) from exc
            if suffix:
                raise Error(f"Channel '{channel}' must not carry a suffix, suffixes follow the models")
        if ModelKind.TROTTER_XY_ZZ in kinds and (self.zz_alpha.value is None or self.zz_beta.value is None):
            raise Error("Model 'trotter-xy-zz' requires 'zz_alpha' and 'zz_beta'")
        if self.sweep_divisions.value:
            if len(self.sweep_divisions.value) < 2:
                raise Error("Option 'sweep_divisions' needs at least two values")
            if ModelKind.TROTTER_XY_ZZ not in kinds:
                raise Error("Option 'sweep_divisions' requires 'trotter-xy-zz' model")
    def model_kinds(self) -> list:
        """Returns selected models as `ModelKind` list.
        """
        result = []
        for item in self.models.value or []:
            try:
                result.append(ModelKind(item.strip().lower()))
            except ValueError:
                raise Error(f"Unknown model '{item.strip()}'") from None
        return result
    def param_family(self) -> ParamFamily:
        """Returns parameter family of the scenario.
        """
        if self.family.value is not None:
            return self.family.value
        return self.model_kinds()[0].family

# Scenario and results

@dataclass
class Scenario:
    """Loaded and validated scenario.
    """
    name: str
    config: ScenarioConfig
    params: Union[ModelParams, ZzParams]
    thresholds: ValidationThresholds
    propagator: PropagatorConfig
    #: Configuration echo sufficient to re-run the scenario
    source: str

@dataclass
class RunRecord:
    """Result of one scenario run.
    """
    scenario: Scenario
    report: ValidationReport
    coefficients: Dict[str, float]
    series: Optional[TimeSeries] = None
    metadata: Dict[str, Any] = field(default_factory=dict)
    def as_dict(self) -> Dict[str, Any]:
        "Returns JSON-ready record without sampled data."
        return {'name': self.scenario.name,
                'config': self.scenario.source,
                'params': self.scenario.params.as_dict(),
                'validation': self.report.as_dict(),
                'coefficients': self.coefficients,
                'channels': list(self.series.names) if self.series is not None else [],
                'metadata': self.metadata}

@dataclass
class DeviationSummary:
    """Pointwise comparison of two channels on identical grids.
    """
    channel: str
    other_channel: str
    max_abs: float
    mean_abs: float
    differences: np.ndarray

# Built-in recipes

_FIG2_PARAMS = """
[params]
# Frequencies in units of g1
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

FIG2A_RECIPE = """
[scenario]
description = Eliminated atom-cavity model against effective XY chain from |b1,c2>
models = eliminated-eq2, spin-xy-eq11
initial_state = b,c
t_start = 0.0
t_end = 600.0
samples = 600
truncation = total_cap
photon_cap = 2
channels = p_c2, p_a1
output = fig2a.csv
""" + _FIG2_PARAMS

FIG2B_RECIPE = """
[scenario]
description = Eliminated atom-cavity model against effective XY chain from (a1+b1) x c2 mixture
models = eliminated-eq2, spin-xy-eq11
initial_state = mixture:fig2b
t_start = 0.0
t_end = 600.0
samples = 600
truncation = total_cap
photon_cap = 2
channels = p_c2, p_a1
output = fig2b.csv
""" + _FIG2_PARAMS

COEFFS_RECIPE = """
[scenario]
description = Effective XY coefficients for the reference parameter set
family = xy
""" + _FIG2_PARAMS

TROTTER_SWEEP_RECIPE = """
[scenario]
description = Product formula of XY and S_zS_z chains, sampled and step-size scan
models = trotter-xy-zz
initial_state = a,c
t_start = 0.0
t_end = 885.0
samples = 101
channels = p_c2, p_a1
zz_alpha = 0.01
zz_beta = 0.005
trotter_substeps = 8
sweep_divisions = 64, 128, 256, 512
output = trotter-sweep.csv
""" + _FIG2_PARAMS

ZZ_CONSERVE_RECIPE = """
[scenario]
description = Atomic populations under the intermediate a S_z Hamiltonian
models = zz-intermediate-eq14
initial_state = a,c|1,0
t_start = 0.0
t_end = 100.0
samples = 201
truncation = total_cap
photon_cap = 2
channels = p_a1, p_c1, p_a2, p_c2
output = zz-conserve.csv

[params]
# Frequencies in units of g1
g1 = 1.0
g4 = 1.0
om2 = 10.0
om3 = -10.0
d1p = 40.0
d3p = 40.0
j_hop = 0.5
n_sites = 2
boundary = open
"""

#: Built-in scenarios by name
BUILTIN_RECIPES: Dict[str, str] = {'fig2a': FIG2A_RECIPE,
                                   'fig2b': FIG2B_RECIPE,
                                   'coeffs': COEFFS_RECIPE,
                                   'trotter-sweep': TROTTER_SWEEP_RECIPE,
                                   'zz-conserve': ZZ_CONSERVE_RECIPE}
