# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           observables/api.py
# DESCRIPTION:    API for sampled observable trajectories
# CREATED:        18.03.2024
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

"""cavityspin - API for sampled observable trajectories

Population channels are named ``p_{level}{site}``, e.g. ``p_c2`` is the probability of atom 2
in level c (spin 2 pointing down). Spin aliases are normalized to level letters.
"""

from __future__ import annotations
from typing import Any, Dict, Tuple
import re
from dataclasses import dataclass, field
import numpy as np
from cavityspin.base import ModelError
from cavityspin.hilbert.api import LEVEL_ALIASES

#: Allowed excursion of population channels outside [0, 1]
POPULATION_SLACK: float = 1e-9

CHANNEL_PATTERN = re.compile(r'^p_(?P<level>[a-e]|up|zero|down|↑|→|↓)(?P<site>[1-9][0-9]*)(?:_(?P<suffix>\w+))?$')

def parse_channel(name: str) -> Tuple[str, int, str]:
    """Parses population channel name into (level letter, site, suffix).

    Raises:
        ModelError: For malformed names.
    """
    match = CHANNEL_PATTERN.match(name.strip())
    if match is None:
        raise ModelError(f"Invalid channel name '{name}'")
    return LEVEL_ALIASES[match['level']], int(match['site']), match['suffix'] or ''

def channel_name(level: str, site: int, suffix: str='') -> str:
    """Returns canonical channel name.
    """
    return f"p_{LEVEL_ALIASES[level]}{site}{('_' + suffix) if suffix else ''}"

@dataclass
class TimeSeries:
    """Named real channels aligned to sample times.

    Raises:
        ModelError: When a channel length differs from number of samples, or a population
            channel leaves [0, 1].
    """
    times: np.ndarray
    channels: Dict[str, np.ndarray] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)
    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        for name in list(self.channels):
            self.add(name, self.channels[name])
    def add(self, name: str, values) -> None:
        """Adds or replaces channel.
        """
        data = np.asarray(values, dtype=float)
        if data.shape != self.times.shape:
            raise ModelError(f"Channel '{name}' has {data.shape[0]} samples, grid has {self.times.shape[0]}")
        if name.startswith('p_') and data.size and \
           (data.min() < -POPULATION_SLACK or data.max() > 1.0 + POPULATION_SLACK):
            raise ModelError(f"Population channel '{name}' leaves [0, 1]")
        self.channels[name] = data
    def __getitem__(self, name: str) -> np.ndarray:
        try:
            return self.channels[name]
        except KeyError:
            raise ModelError(f"Unknown channel '{name}'") from None
    def __contains__(self, name: str) -> bool:
        return name in self.channels
    @property
    def names(self) -> Tuple[str, ...]:
        "Channel names in insertion order."
        return tuple(self.channels)
    @property
    def n_samples(self) -> int:
        "Number of samples."
        return self.times.shape[0]
