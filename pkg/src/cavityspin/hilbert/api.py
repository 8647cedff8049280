# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           hilbert/api.py
# DESCRIPTION:    API for composite Hilbert spaces and states
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

"""cavityspin - API for composite Hilbert spaces and states

Basis ordering is fixed so that serialized states stay portable:

- atomic configurations are ordered lexicographically with site 1 most significant, and
  levels ordered a < b < c (< d < e);
- photon occupations are ordered by total photon number, then with the first cavity
  highest first, e.g. (0,0), (1,0), (0,1), (2,0), (1,1), (0,2);
- the photon index varies fastest: ``index = atomic_index * photon_dimension + photon_index``.

Sites are numbered from 1.
"""

from __future__ import annotations
from typing import Dict, Hashable, Iterable, Sequence, Tuple, Union
import itertools
from enum import Enum
import numpy as np
from firebird.base.logging import LoggingIdMixin
from cavityspin.base import ModelError

#: Allowed deviation of state norm from 1
NORM_TOLERANCE: float = 1e-9
#: Allowed deviation of mixture weight sum from 1
WEIGHT_TOLERANCE: float = 1e-12
#: Default cap for Hilbert space dimension
DEFAULT_MAX_DIMENSION: int = 2 ** 20

#: Level label aliases; spin labels map to S_z eigenstates m = +1, 0, -1
LEVEL_ALIASES: Dict[str, str] = {'a': 'a', 'b': 'b', 'c': 'c', 'd': 'd', 'e': 'e',
                                 'up': 'a', '↑': 'a',
                                 'zero': 'b', '→': 'b',
                                 'down': 'c', '↓': 'c'}

class AtomicLevels(Enum):
    """Atomic level set per site.
    """
    THREE = 'abc'
    FIVE = 'abcde'
    @property
    def labels(self) -> Tuple[str, ...]:
        "Level labels in basis order."
        return tuple(self.value)
    @property
    def count(self) -> int:
        "Number of levels per site."
        return len(self.value)

class TruncationKind(Enum):
    """Photon truncation rule.
    """
    #: Total photon number over all cavities is capped
    TOTAL_CAP = 'total_cap'
    #: Each cavity is capped separately
    PER_CAVITY = 'per_cavity'

def resolve_level(label: str, atomic_levels: AtomicLevels) -> int:
    """Returns basis index of level `label` (letter or spin alias).

    Raises:
        ModelError: For unknown label or label not present in the level set.
    """
    key = str(label).strip()
    name = LEVEL_ALIASES.get(key, LEVEL_ALIASES.get(key.lower()) if len(key) > 1 else None)
    if name is None or name not in atomic_levels.labels:
        raise ModelError(f"Unknown level '{label}' for {atomic_levels.name.lower()}-level atoms")
    return atomic_levels.labels.index(name)

class HilbertSpace(LoggingIdMixin):
    """Composite basis of N atoms (each with fixed level set) and N truncated cavity modes.

    Instances are immutable. Use `.build_space()` to create them.

    Arguments:
        n_sites: Chain length N.
        atomic_levels: Level set per site.
        truncation: Photon truncation rule.
        photon_cap: Cap value for the truncation rule.
        photon_states: Admissible photon occupations in basis order.
    """
    _logging_id_ = 'HilbertSpace'
    def __init__(self, n_sites: int, atomic_levels: AtomicLevels, truncation: TruncationKind,
                 photon_cap: int, photon_states: Sequence[Tuple[int, ...]]):
        #: Chain length
        self.n_sites: int = n_sites
        #: Level set per site
        self.atomic_levels: AtomicLevels = atomic_levels
        #: Photon truncation rule
        self.truncation: TruncationKind = truncation
        #: Photon truncation cap
        self.photon_cap: int = photon_cap
        #: Admissible photon occupations in basis order
        self.photon_states: Tuple[Tuple[int, ...], ...] = tuple(tuple(occ) for occ in photon_states)
        self._photon_index: Dict[Tuple[int, ...], int] = {occ: i for i, occ in enumerate(self.photon_states)}
        #: Number of atomic configurations
        self.atomic_dimension: int = atomic_levels.count ** n_sites
        #: Number of photon occupations
        self.photon_dimension: int = len(self.photon_states)
        #: Total dimension
        self.dimension: int = self.atomic_dimension * self.photon_dimension
        atomic = np.array(list(itertools.product(range(atomic_levels.count), repeat=n_sites)),
                          dtype=np.int8).reshape(self.atomic_dimension, n_sites)
        #: Level index of every site for every basis state (dimension × N)
        self.level_table: np.ndarray = np.repeat(atomic, self.photon_dimension, axis=0)
        #: Photon occupation of every cavity for every basis state (dimension × N)
        self.photon_table: np.ndarray = np.tile(np.array(self.photon_states, dtype=np.int64),
                                                (self.atomic_dimension, 1))
        self.level_table.setflags(write=False)
        self.photon_table.setflags(write=False)
    def __repr__(self):
        return (f"HilbertSpace(n_sites={self.n_sites}, levels={self.atomic_levels.name.lower()}, "
                f"{self.truncation.value}={self.photon_cap}, dimension={self.dimension})")
    def __eq__(self, other):
        if isinstance(other, HilbertSpace):
            return self.key == other.key
        return NotImplemented
    def __hash__(self):
        return hash(self.key)
    def check_site(self, site: int) -> None:
        """Raises `ModelError` when `site` is not in 1..N.
        """
        if not isinstance(site, (int, np.integer)) or not 1 <= site <= self.n_sites:
            raise ModelError(f"Site must be in 1..{self.n_sites}, got {site!r}")
    def atomic_index(self, levels: Union[str, Iterable[str]]) -> int:
        """Returns index of atomic configuration.

        Arguments:
            levels: Level label per site, as sequence or comma-separated / compact string.
        """
        labels = split_labels(levels)
        if len(labels) != self.n_sites:
            raise ModelError(f"Expected {self.n_sites} level labels, got {len(labels)}")
        index = 0
        for label in labels:
            index = index * self.atomic_levels.count + resolve_level(label, self.atomic_levels)
        return index
    def photon_index(self, photons: Sequence[int]) -> int:
        """Returns index of photon occupation.

        Raises:
            ModelError: When occupation is not admissible under the truncation.
        """
        occ = tuple(int(n) for n in photons)
        if len(occ) != self.n_sites:
            raise ModelError(f"Expected {self.n_sites} photon occupations, got {len(occ)}")
        index = self._photon_index.get(occ)
        if index is None:
            raise ModelError(f"Photon occupation {occ} exceeds truncation "
                             f"{self.truncation.value}={self.photon_cap}")
        return index
    def index_of(self, levels: Union[str, Iterable[str]], photons: Sequence[int]=None) -> int:
        """Returns flat basis index for composite label. Photons default to vacuum.
        """
        if photons is None:
            photons = (0,) * self.n_sites
        return self.atomic_index(levels) * self.photon_dimension + self.photon_index(photons)
    def label_of(self, index: int) -> Tuple[Tuple[str, ...], Tuple[int, ...]]:
        """Returns composite label (levels per site, photons per cavity) of basis index.
        """
        if not 0 <= index < self.dimension:
            raise ModelError(f"Basis index {index} out of range")
        labels = self.atomic_levels.labels
        return (tuple(labels[i] for i in self.level_table[index]),
                tuple(int(n) for n in self.photon_table[index]))
    @property
    def key(self) -> Hashable:
        "Identity of the space."
        return (self.n_sites, self.atomic_levels, self.truncation, self.photon_cap)
    @property
    def has_photons(self) -> bool:
        "True when photon ladders are not trivial."
        return self.photon_dimension > 1

def split_labels(levels: Union[str, Iterable[str]]) -> Tuple[str, ...]:
    """Splits level specification into per-site labels.

    Strings may be comma-separated (``"b,c"``, ``"up,down"``) or compact (``"bc"``).
    """
    if isinstance(levels, str):
        text = levels.strip()
        if ',' in text:
            return tuple(item.strip() for item in text.split(','))
        if len(text) > 1 and text.lower() in LEVEL_ALIASES:
            return (text,)
        return tuple(text)
    return tuple(levels)

class StateVector:
    """Pure state over `HilbertSpace`.

    Arguments:
        space: Hilbert space.
        amplitudes: Complex amplitudes in basis order.
        check_norm: When True, norm must equal 1 within `NORM_TOLERANCE`.

    Raises:
        ModelError: On dimension mismatch or norm violation.
    """
    def __init__(self, space: HilbertSpace, amplitudes: Sequence[complex], *, check_norm: bool=True):
        amps = np.array(amplitudes, dtype=complex).reshape(-1)
        if amps.shape[0] != space.dimension:
            raise ModelError(f"State has {amps.shape[0]} amplitudes, space dimension is {space.dimension}")
        #: Hilbert space
        self.space: HilbertSpace = space
        #: Complex amplitudes
        self.amplitudes: np.ndarray = amps
        if check_norm and abs(self.norm() - 1.0) > NORM_TOLERANCE:
            raise ModelError(f"State norm {self.norm()!r} deviates from 1")
    @classmethod
    def from_amplitudes(cls, space: HilbertSpace, amplitudes: Sequence[complex], *,
                        normalize: bool=False) -> StateVector:
        """Creates state from amplitudes, optionally normalizing them first.
        """
        amps = np.array(amplitudes, dtype=complex).reshape(-1)
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0.0:
                raise ModelError("Cannot normalize zero vector")
            amps = amps / norm
        return cls(space, amps)
    def norm(self) -> float:
        "Returns Euclidean norm."
        return float(np.linalg.norm(self.amplitudes))
    def probabilities(self) -> np.ndarray:
        "Returns |amplitude|² per basis state."
        return np.abs(self.amplitudes) ** 2
    def expectation(self, operator, t: float=0.0) -> float:
        """Returns ⟨ψ|H(t)|ψ⟩ for operator over the same space.
        """
        if operator.space != self.space:
            raise ModelError("Operator and state belong to different spaces")
        return float(np.vdot(self.amplitudes, operator.apply(t, self.amplitudes)).real)

class MixtureState:
    """Classical mixture represented as weighted ensemble of pure states.

    Arguments:
        members: Pairs (weight, state).

    Raises:
        ModelError: For negative weights, weights not summing to 1, or mixed spaces.
    """
    def __init__(self, members: Iterable[Tuple[float, StateVector]]):
        items = tuple((float(w), s) for w, s in members)
        if not items:
            raise ModelError("Mixture must have at least one member")
        if any(w < 0.0 for w, _ in items):
            raise ModelError("Mixture weights must be non-negative")
        if abs(sum(w for w, _ in items) - 1.0) > WEIGHT_TOLERANCE:
            raise ModelError("Mixture weights must sum to 1")
        space = items[0][1].space
        if any(s.space != space for _, s in items):
            raise ModelError("All mixture members must share one space")
        #: Weighted members
        self.members: Tuple[Tuple[float, StateVector], ...] = items
    @property
    def space(self) -> HilbertSpace:
        "Shared Hilbert space."
        return self.members[0][1].space
    @property
    def weights(self) -> Tuple[float, ...]:
        "Member weights."
        return tuple(w for w, _ in self.members)
