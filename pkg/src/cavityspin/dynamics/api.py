# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           dynamics/api.py
# DESCRIPTION:    API for time grids, propagator configuration and trajectories
# CREATED:        15.03.2024
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

"""cavityspin - API for time grids, propagator configuration and trajectories
"""

from __future__ import annotations
from typing import Any, Dict, List, Sequence
from dataclasses import dataclass, field
from enum import Enum
import numpy as np
from firebird.base.config import Config, EnumOption, FloatOption, IntOption
from cavityspin.base import Error, ModelError
from cavityspin.hilbert.api import HilbertSpace, StateVector, MixtureState

class PropagationMethod(Enum):
    """Propagation route.
    """
    EIGENDECOMPOSITION = 'eigendecomposition'
    KRYLOV = 'krylov'
    RK4_ADAPTIVE = 'rk4_adaptive'

class TrotterOrder(Enum):
    """Order of factors within one product-formula period.
    """
    XY_FIRST = 'xy_first'
    ZZ_FIRST = 'zz_first'

@dataclass(frozen=True)
class TimeGrid:
    """Uniform sampling grid in units of 1/g₁.

    Raises:
        ModelError: When `t_end` <= `t_start` or fewer than two samples.
    """
    t_start: float
    t_end: float
    n_samples: int
    def __post_init__(self):
        if not self.t_end > self.t_start:
            raise ModelError(f"Grid end {self.t_end} must be after start {self.t_start}")
        if self.n_samples < 2:
            raise ModelError("Grid needs at least two samples")
    @property
    def times(self) -> np.ndarray:
        "Sample times."
        return np.linspace(self.t_start, self.t_end, self.n_samples)
    @property
    def spacing(self) -> float:
        "Sample spacing."
        return (self.t_end - self.t_start) / (self.n_samples - 1)

class PropagatorConfig(Config):
    """Propagator configuration.
    """
    def __init__(self, name: str='propagator'):
        super().__init__(name)
        #: Propagation route for static Hamiltonians
        self.method: EnumOption = \
            EnumOption('method', PropagationMethod, "Propagation route for static Hamiltonians",
                       required=True, default=PropagationMethod.EIGENDECOMPOSITION)
        #: Error tolerance per step
        self.tolerance: FloatOption = \
            FloatOption('tolerance', "Error tolerance per step", required=True, default=1e-9)
        #: Largest dimension for dense eigendecomposition
        self.dense_limit: IntOption = \
            IntOption('dense_limit', "Largest dimension for dense eigendecomposition", required=True,
                      default=4096)
        #: Largest integrator step
        self.max_step: FloatOption = \
            FloatOption('max_step', "Largest integrator step (1/g1)", required=True, default=0.05)
        #: Smallest integrator step before abort
        self.min_step: FloatOption = \
            FloatOption('min_step', "Smallest integrator step before abort (1/g1)", required=True,
                        default=1e-12)
        #: Krylov subspace dimension
        self.krylov_dim: IntOption = \
            IntOption('krylov_dim', "Krylov subspace dimension", required=True, default=30)
    def validate(self) -> None:
        """Extended validation.

        - `tolerance`, `max_step` and `min_step` must be positive, `min_step` below `max_step`.
        - `krylov_dim` must be at least 2.
        """
        super().validate()
        if self.tolerance.value <= 0.0:
            raise Error("Option 'tolerance' must be positive")
        if self.max_step.value <= 0.0 or self.min_step.value <= 0.0:
            raise Error("Options 'max_step' and 'min_step' must be positive")
        if self.min_step.value >= self.max_step.value:
            raise Error("Option 'min_step' must be below 'max_step'")
        if self.krylov_dim.value < 2:
            raise Error("Option 'krylov_dim' must be at least 2")

@dataclass
class StateSeries:
    """Pure-state trajectory sampled on a grid.
    """
    #: Hilbert space
    space: HilbertSpace
    #: Sample times
    times: np.ndarray
    #: Amplitudes, one row per sample
    amplitudes: np.ndarray
    #: Route and diagnostics
    metadata: Dict[str, Any] = field(default_factory=dict)
    def __len__(self) -> int:
        return self.times.shape[0]
    def state(self, index: int) -> StateVector:
        "Returns sampled state."
        return StateVector(self.space, self.amplitudes[index])
    def final(self) -> StateVector:
        "Returns last sampled state."
        return self.state(-1)
    def probabilities(self) -> np.ndarray:
        "Returns |amplitude|² per sample and basis state."
        return np.abs(self.amplitudes) ** 2
    def norm_drift(self) -> float:
        "Returns max |‖ψ(t)‖ - 1| over samples."
        return float(np.max(np.abs(np.linalg.norm(self.amplitudes, axis=1) - 1.0)))

@dataclass
class MixtureSeries:
    """Trajectory of weighted ensemble; each member evolves independently.
    """
    weights: Sequence[float]
    members: List[StateSeries]
    @property
    def space(self) -> HilbertSpace:
        "Shared Hilbert space."
        return self.members[0].space
    @property
    def times(self) -> np.ndarray:
        "Sample times."
        return self.members[0].times
    def __len__(self) -> int:
        return len(self.times)
    def state(self, index: int) -> MixtureState:
        "Returns sampled mixture."
        return MixtureState([(w, m.state(index)) for w, m in zip(self.weights, self.members)])
