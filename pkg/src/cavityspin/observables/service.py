# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           observables/service.py
# DESCRIPTION:    Populations, level distributions and magnetization
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

"""cavityspin - Populations, level distributions and magnetization

Photon occupations are traced over; mixtures are averaged with their weights.
"""

from __future__ import annotations
from typing import Iterable, List, Tuple, Union
import numpy as np
from cavityspin.base import ModelError
from cavityspin.hilbert.api import HilbertSpace, StateVector, MixtureState, AtomicLevels, resolve_level
from cavityspin.dynamics.api import StateSeries, MixtureSeries
from cavityspin.observables.api import TimeSeries, parse_channel, channel_name

State = Union[StateVector, MixtureState]
Series = Union[StateSeries, MixtureSeries]

def _mask(space: HilbertSpace, site: int, level: str) -> np.ndarray:
    space.check_site(site)
    return space.level_table[:, site - 1] == resolve_level(level, space.atomic_levels)

def _magnetization(space: HilbertSpace) -> np.ndarray:
    if space.atomic_levels is not AtomicLevels.THREE:
        raise ModelError("Magnetization is defined for three-level (spin-1) spaces only")
    return (1.0 - space.level_table.astype(float)).sum(axis=1)

def _members(state) -> List[Tuple[float, object]]:
    if isinstance(state, MixtureState):
        return list(state.members)
    if isinstance(state, MixtureSeries):
        return list(zip(state.weights, state.members))
    return [(1.0, state)]

def population(state: State, site: int, level: str) -> float:
    """Returns probability of atom `site` (1-based) in `level` (letter or spin alias).

    Raises:
        ModelError: For invalid site or level.
    """
    mask = _mask(state.space, site, level)
    return float(sum(w * s.probabilities()[mask].sum() for w, s in _members(state)))

def level_distribution(state: State, site: int) -> Tuple[float, ...]:
    """Returns probabilities of all levels of atom `site`, in level order.
    """
    space = state.space
    space.check_site(site)
    count = space.atomic_levels.count
    result = np.zeros(count)
    for weight, member in _members(state):
        result += weight * np.bincount(space.level_table[:, site - 1], weights=member.probabilities(),
                                       minlength=count)
    return tuple(float(p) for p in result)

def total_magnetization(state: State) -> float:
    """Returns ⟨Σⱼ S_zj⟩.

    Raises:
        ModelError: For five-level spaces.
    """
    moments = _magnetization(state.space)
    return float(sum(w * (s.probabilities() * moments).sum() for w, s in _members(state)))

def population_series(series: Series, site: int, level: str) -> np.ndarray:
    """Returns population of atom `site` in `level` for every sample.
    """
    mask = _mask(series.space, site, level)
    return sum(w * m.probabilities()[:, mask].sum(axis=1) for w, m in _members(series))

def magnetization_series(series: Series) -> np.ndarray:
    """Returns ⟨Σⱼ S_zj⟩ for every sample.
    """
    moments = _magnetization(series.space)
    return sum(w * (m.probabilities() @ moments) for w, m in _members(series))

def channel_series(series: Series, channels: Iterable[str], suffix: str='') -> TimeSeries:
    """Collects population channels into `TimeSeries`.

    Arguments:
        series: State or mixture trajectory.
        channels: Channel names like ``p_c2`` or ``p_↓2``. A name may carry its own suffix
            (``p_c2_full``) that is kept in the output name.
        suffix: Appended to canonical channel names (``p_c2_full``).

    Raises:
        ModelError: When a channel carries a suffix different from `suffix`.
    """
    result = TimeSeries(series.times)
    for name in channels:
        level, site, own = parse_channel(name)
        if own and suffix and own != suffix:
            raise ModelError(f"Channel '{name}' conflicts with suffix '{suffix}'")
        result.add(channel_name(level, site, suffix or own), population_series(series, site, level))
    return result

def dominant_frequencies(times: np.ndarray, values: np.ndarray, count: int=2) -> List[Tuple[float, float]]:
    """Returns strongest nonzero spectral peaks as (frequency, amplitude), strongest first.

    Frequencies are in cycles per unit time. Only local maxima of the one-sided spectrum
    count as peaks, the mean is removed first.
    """
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    spectrum = np.abs(np.fft.rfft(values - values.mean()))
    freqs = np.fft.rfftfreq(values.shape[0], d=times[1] - times[0])
    peaks = [i for i in range(1, spectrum.shape[0])
             if spectrum[i] >= spectrum[i - 1] and (i + 1 == spectrum.shape[0] or spectrum[i] > spectrum[i + 1])]
    peaks.sort(key=lambda i: spectrum[i], reverse=True)
    return [(float(freqs[i]), float(spectrum[i])) for i in peaks[:count]]
