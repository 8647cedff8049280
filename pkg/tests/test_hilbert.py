# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           tests/test_hilbert.py
# DESCRIPTION:    Tests for Hilbert spaces and states
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
import itertools
import logging
import numpy as np
import pytest
from cavityspin.base import ModelError, DimensionLimitError
from cavityspin.hilbert.api import (AtomicLevels, TruncationKind, StateVector, MixtureState, resolve_level,
                                    split_labels)
from cavityspin.hilbert.service import (photon_state_count, enumerate_photon_states, build_space,
                                        product_state, fig2b_mixture, parse_state_spec)

def test_dimensions():
    assert build_space(2, AtomicLevels.THREE, TruncationKind.TOTAL_CAP, 2).dimension == 54
    assert build_space(2, AtomicLevels.THREE, TruncationKind.PER_CAVITY, 2).dimension == 81
    assert build_space(2, AtomicLevels.FIVE, TruncationKind.TOTAL_CAP, 2).dimension == 150
    assert build_space(3).dimension == 27
    assert photon_state_count(3, TruncationKind.TOTAL_CAP, 3) == 20
    assert photon_state_count(3, TruncationKind.PER_CAVITY, 1) == 8

def test_photon_order():
    assert enumerate_photon_states(2, TruncationKind.TOTAL_CAP, 2) == \
        [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert enumerate_photon_states(2, TruncationKind.PER_CAVITY, 1) == [(0, 0), (1, 0), (0, 1), (1, 1)]

def test_index_maps(eliminated_space):
    space = eliminated_space
    assert space.index_of('b,c') == (1 * 3 + 2) * 6
    assert space.index_of('bc', (0, 1)) == (1 * 3 + 2) * 6 + 2
    assert space.index_of('up,down') == space.index_of('a,c')
    assert space.index_of(['↑', '→']) == space.index_of('a,b')
    assert space.label_of(space.index_of('c,a', (1, 1))) == (('c', 'a'), (1, 1))
    assert tuple(space.level_table[space.index_of('c,a')]) == (2, 0)
    assert tuple(space.photon_table[4]) == (1, 1)

def test_invalid_labels(eliminated_space):
    with pytest.raises(ModelError):
        eliminated_space.index_of('d,c')
    with pytest.raises(ModelError):
        eliminated_space.index_of('b')
    with pytest.raises(ModelError, match="truncation"):
        eliminated_space.index_of('b,c', (3, 0))
    with pytest.raises(ModelError):
        eliminated_space.label_of(54)
    with pytest.raises(ModelError):
        eliminated_space.check_site(0)
    with pytest.raises(ModelError):
        build_space(0)
    with pytest.raises(ModelError):
        build_space(2, photon_cap=-1)

def test_aliases():
    assert resolve_level('UP', AtomicLevels.THREE) == 0
    assert resolve_level('↓', AtomicLevels.THREE) == 2
    assert resolve_level('e', AtomicLevels.FIVE) == 4
    with pytest.raises(ModelError):
        resolve_level('e', AtomicLevels.THREE)
    assert split_labels('up') == ('up',)
    assert split_labels('a, c') == ('a', 'c')
    assert split_labels('abc') == ('a', 'b', 'c')

def test_dimension_cap():
    with pytest.raises(DimensionLimitError) as exc_info:
        build_space(2, AtomicLevels.THREE, TruncationKind.TOTAL_CAP, 2, max_dimension=50)
    assert exc_info.value.dimension == 54

def test_tables_are_read_only(eliminated_space):
    with pytest.raises(ValueError):
        eliminated_space.level_table[0, 0] = 1

def test_space_identity():
    first = build_space(2, AtomicLevels.THREE, TruncationKind.TOTAL_CAP, 2)
    second = build_space(2, AtomicLevels.THREE, TruncationKind.TOTAL_CAP, 2)
    assert first == second
    assert hash(first) == hash(second)
    assert first != build_space(2, AtomicLevels.THREE, TruncationKind.PER_CAVITY, 2)
    assert first.has_photons
    assert not build_space(2).has_photons

def test_state_vector(eliminated_space):
    state = product_state(eliminated_space, 'b,c')
    assert state.norm() == pytest.approx(1.0)
    assert state.probabilities()[eliminated_space.index_of('b,c')] == 1.0
    with pytest.raises(ModelError, match="norm"):
        StateVector(eliminated_space, np.full(54, 0.5))
    with pytest.raises(ModelError):
        StateVector(eliminated_space, np.ones(10))
    normalized = StateVector.from_amplitudes(eliminated_space, np.ones(54), normalize=True)
    assert normalized.norm() == pytest.approx(1.0)
    with pytest.raises(ModelError):
        StateVector.from_amplitudes(eliminated_space, np.zeros(54), normalize=True)

def test_mixture(eliminated_space):
    mixture = fig2b_mixture(eliminated_space)
    assert mixture.weights == (0.5, 0.5)
    assert mixture.space == eliminated_space
    state = product_state(eliminated_space, 'a,a')
    with pytest.raises(ModelError):
        MixtureState([(0.5, state), (0.6, state)])
    with pytest.raises(ModelError):
        MixtureState([(1.5, state), (-0.5, state)])
    with pytest.raises(ModelError):
        MixtureState([(0.5, state), (0.5, product_state(build_space(2), 'a,a'))])
    with pytest.raises(ModelError):
        fig2b_mixture(build_space(3))

def test_state_spec(eliminated_space):
    state = parse_state_spec(eliminated_space, 'b,c|1,0')
    assert isinstance(state, StateVector)
    assert state.probabilities()[eliminated_space.index_of('b,c', (1, 0))] == 1.0
    assert isinstance(parse_state_spec(eliminated_space, 'Mixture:fig2b'), MixtureState)
    with pytest.raises(ModelError):
        parse_state_spec(eliminated_space, 'mixture:other')
    with pytest.raises(ModelError):
        parse_state_spec(eliminated_space, 'b,c|x,0')

@pytest.mark.parametrize('levels', [AtomicLevels.THREE, AtomicLevels.FIVE])
@pytest.mark.parametrize('truncation', [TruncationKind.TOTAL_CAP, TruncationKind.PER_CAVITY])
def test_index_label_round_trip(levels, truncation):
    space = build_space(2, levels, truncation, 2)
    for index in range(space.dimension):
        atoms, photons = space.label_of(index)
        assert space.index_of(atoms, photons) == index

@pytest.mark.parametrize('n_sites', [1, 2, 3])
@pytest.mark.parametrize('cap', [0, 1, 2, 3])
def test_dimension_matches_enumeration(n_sites, cap):
    for truncation in TruncationKind:
        admissible = [occ for occ in itertools.product(range(cap + 1), repeat=n_sites)
                      if truncation is TruncationKind.PER_CAVITY or sum(occ) <= cap]
        assert photon_state_count(n_sites, truncation, cap) == len(admissible)
        assert sorted(enumerate_photon_states(n_sites, truncation, cap)) == sorted(admissible)
        for levels in AtomicLevels:
            configurations = list(itertools.product(levels.labels, repeat=n_sites))
            space = build_space(n_sites, levels, truncation, cap)
            assert space.dimension == len(configurations) * len(admissible)

def test_space_construction_is_logged(caplog):
    with caplog.at_level(logging.DEBUG):
        build_space(2, AtomicLevels.THREE, TruncationKind.TOTAL_CAP, 2)
    assert 'dimension=54' in caplog.text
