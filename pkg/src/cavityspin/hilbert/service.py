# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           hilbert/service.py
# DESCRIPTION:    Hilbert space construction and initial states
# CREATED:        13.03.2024
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

"""cavityspin - Hilbert space construction and initial states
"""

from __future__ import annotations
from typing import Iterable, List, Sequence, Tuple, Union
import itertools
import math
import numpy as np
from firebird.base.logging import get_logger
from cavityspin.base import ModelError, DimensionLimitError
from cavityspin.hilbert.api import (HilbertSpace, StateVector, MixtureState, AtomicLevels, TruncationKind,
                                    DEFAULT_MAX_DIMENSION)

#: Prefix of mixture initial-state specifications
MIXTURE_PREFIX = 'mixture:'

def photon_state_count(n_sites: int, truncation: TruncationKind, photon_cap: int) -> int:
    """Returns number of admissible photon occupations.
    """
    if truncation is TruncationKind.TOTAL_CAP:
        return math.comb(photon_cap + n_sites, n_sites)
    return (photon_cap + 1) ** n_sites

def enumerate_photon_states(n_sites: int, truncation: TruncationKind, photon_cap: int) -> List[Tuple[int, ...]]:
    """Returns admissible photon occupations in basis order.
    """
    states = itertools.product(range(photon_cap + 1), repeat=n_sites)
    if truncation is TruncationKind.TOTAL_CAP:
        states = (occ for occ in states if sum(occ) <= photon_cap)
    return sorted(states, key=lambda occ: (sum(occ), tuple(-n for n in occ)))

def build_space(n_sites: int, atomic_levels: AtomicLevels=AtomicLevels.THREE,
                truncation: TruncationKind=TruncationKind.TOTAL_CAP, photon_cap: int=0, *,
                max_dimension: int=DEFAULT_MAX_DIMENSION) -> HilbertSpace:
    """Builds composite Hilbert space.

    Arguments:
        n_sites: Chain length N (>= 1).
        atomic_levels: Level set per site.
        truncation: Photon truncation rule.
        photon_cap: Total cap or per-cavity cap (>= 0). Zero means no photons.
        max_dimension: Refuse spaces above this dimension.

    Raises:
        ModelError: For invalid arguments.
        DimensionLimitError: When dimension exceeds `max_dimension`.
    """
    if not isinstance(n_sites, int) or n_sites < 1:
        raise ModelError(f"Chain length must be integer >= 1, got {n_sites!r}")
    if not isinstance(photon_cap, int) or photon_cap < 0:
        raise ModelError(f"Photon cap must be integer >= 0, got {photon_cap!r}")
    dimension = atomic_levels.count ** n_sites * photon_state_count(n_sites, truncation, photon_cap)
    if dimension > max_dimension:
        raise DimensionLimitError(f"Hilbert space dimension {dimension} exceeds cap {max_dimension}",
                                  dimension=dimension)
    space = HilbertSpace(n_sites, atomic_levels, truncation, photon_cap,
                         enumerate_photon_states(n_sites, truncation, photon_cap))
    get_logger(space).debug(f"Built {space!r}")
    return space

def product_state(space: HilbertSpace, levels: Union[str, Iterable[str]],
                  photons: Sequence[int]=None) -> StateVector:
    """Returns product basis state.

    Arguments:
        space: Hilbert space.
        levels: Level label per site (letters or spin aliases).
        photons: Photon occupation per cavity, vacuum when not specified.

    Raises:
        ModelError: For invalid labels or occupation outside the truncation.
    """
    amplitudes = np.zeros(space.dimension, dtype=complex)
    amplitudes[space.index_of(levels, photons)] = 1.0
    return StateVector(space, amplitudes)

def fig2b_mixture(space: HilbertSpace) -> MixtureState:
    """Returns equal mixture of |a₁,c₂⟩ and |b₁,c₂⟩ with vacuum photons.

    Raises:
        ModelError: When space is not a two-site space.
    """
    if space.n_sites != 2:
        raise ModelError(f"Mixture a1/b1 x c2 requires two sites, space has {space.n_sites}")
    return MixtureState([(0.5, product_state(space, 'a,c')), (0.5, product_state(space, 'b,c'))])

def parse_state_spec(space: HilbertSpace, spec: str) -> Union[StateVector, MixtureState]:
    """Parses initial-state specification.

    Accepted forms:

    - ``b,c`` - product state with vacuum photons,
    - ``b,c|1,0`` - product state with explicit photon occupation,
    - ``mixture:fig2b`` - the a₁/b₁ × c₂ equal mixture.

    Raises:
        ModelError: For unknown or invalid specification.
    """
    text = spec.strip()
    if text.lower().startswith(MIXTURE_PREFIX):
        name = text[len(MIXTURE_PREFIX):].strip().lower()
        if name == 'fig2b':
            return fig2b_mixture(space)
        raise ModelError(f"Unknown mixture '{name}'")
    photons = None
    if '|' in text:
        text, occ = text.split('|', 1)
        try:
            photons = [int(n) for n in occ.split(',')]
        except ValueError as exc:
            raise ModelError(f"Invalid photon occupation '{occ}'") from exc
    return product_state(space, text, photons)
