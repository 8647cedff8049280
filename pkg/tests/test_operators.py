# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           tests/test_operators.py
# DESCRIPTION:    Tests for Hamiltonian builders
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
import logging
from dataclasses import replace
import numpy as np
import scipy.sparse as sp
import pytest
from cavityspin.base import ModelError, Boundary
from cavityspin.model.service import compute_zz_coefficients
from cavityspin.hilbert.api import AtomicLevels, TruncationKind
from cavityspin.hilbert.service import build_space
from cavityspin.operators.service import (spin1_operators, chain_links, spin_site_operator, total_sz,
                                          build_h_full, build_h_eliminated, build_h_xy, build_h_zz_full,
                                          build_h_zz_intermediate, build_h_zz, build_h_zz_direct)

def _commutator_norm(first, second) -> float:
    diff = first @ second - second @ first
    return float(abs(diff).max()) if diff.nnz else 0.0

def test_spin1_algebra():
    ops = spin1_operators()
    assert np.allclose(ops.sx @ ops.sy - ops.sy @ ops.sx, 1j * ops.sz)
    assert np.allclose(ops.sx @ ops.sx + ops.sy @ ops.sy, np.diag([1.0, 2.0, 1.0]))
    assert np.allclose(ops.splus @ ops.sminus - ops.sminus @ ops.splus, 2.0 * ops.sz)

def test_chain_links():
    assert chain_links(3, Boundary.OPEN) == [(0, 1), (1, 2)]
    assert chain_links(3, Boundary.PERIODIC) == [(0, 1), (1, 2), (2, 0)]
    assert chain_links(2, Boundary.PERIODIC) == [(0, 1), (1, 0)]
    assert chain_links(1, Boundary.PERIODIC) == []

def test_site_operators():
    assert np.allclose(total_sz(2).diagonal(), [2, 1, 0, 1, 0, -1, 0, -1, -2])
    with pytest.raises(ModelError):
        spin_site_operator(2, 3, np.eye(3))

def test_static_builders_are_hermitian(fig2_params, fig2_coefficients, zz_params, eliminated_space):
    operators = [build_h_eliminated(fig2_params, eliminated_space),
                 build_h_xy(fig2_coefficients, 3, Boundary.PERIODIC),
                 build_h_zz_intermediate(zz_params, eliminated_space),
                 build_h_zz(compute_zz_coefficients(zz_params), 3)]
    for operator in operators:
        assert not operator.is_time_dependent
        assert operator.hermiticity_residual() == 0.0

def test_driven_builders_are_hermitian(fig2_params, zz_params, full_space):
    rng = np.random.default_rng(20240322)
    for operator in (build_h_full(fig2_params, full_space), build_h_zz_full(zz_params, full_space)):
        assert operator.is_time_dependent
        for t in rng.uniform(0.0, 100.0, 20):
            assert operator.hermiticity_residual(t) < 1e-14

def test_full_hamiltonian(fig2_params, full_space):
    operator = build_h_full(fig2_params, full_space)
    assert operator.label == 'full-eq1'
    assert operator.frequencies == (40.0, 80.0, 20.0, 40.0)
    psi = np.random.default_rng(7).normal(size=operator.dimension) + 0j
    for t in (0.0, 0.3, 12.5):
        assert np.allclose(operator.apply(t, psi), operator.at(t) @ psi)
    # g1 a_1 |d><a| e^{i d1 t}: |a,b>(1,0) -> |d,b>(0,0)
    col = full_space.index_of('a,b', (1, 0))
    row = full_space.index_of('d,b')
    assert operator.at(0.0)[row, col] == pytest.approx(fig2_params.g1)
    with pytest.raises(ModelError):
        build_h_full(fig2_params, build_space(2, AtomicLevels.THREE, TruncationKind.TOTAL_CAP, 2))
    with pytest.raises(ModelError):
        build_h_full(replace(fig2_params, n_sites=3), full_space)

def test_eliminated_hamiltonian(fig2_params, eliminated_space):
    space = eliminated_space
    matrix = build_h_eliminated(fig2_params, space).to_dense()
    # Hopping moves photon between cavities
    assert matrix[space.index_of('b,c', (0, 1)), space.index_of('b,c', (1, 0))] == pytest.approx(0.5)
    # Cavity-assisted Raman b -> a with photon absorption
    raman = fig2_params.om1 * fig2_params.g1 / fig2_params.d1
    assert matrix[space.index_of('b,c'), space.index_of('a,c', (1, 0))] == pytest.approx(-raman)
    # Photon Stark shift equal on all levels under matching conditions
    vacuum = matrix[space.index_of('b,c'), space.index_of('b,c')]
    one = matrix[space.index_of('b,c', (1, 0)), space.index_of('b,c', (1, 0))]
    assert one - vacuum == pytest.approx(-0.025)
    with pytest.raises(ModelError):
        build_h_eliminated(fig2_params, build_space(2, AtomicLevels.FIVE))

def test_xy_hamiltonian(fig2_coefficients):
    c = fig2_coefficients
    operator = build_h_xy(c, 2)
    space = operator.space
    matrix = operator.to_dense()
    assert operator.dimension == 9
    assert matrix[space.index_of('c,b'), space.index_of('b,c')] == pytest.approx(c.c_coef)
    assert matrix[space.index_of('b,c'), space.index_of('b,c')] == pytest.approx(3 * c.a_coef - c.b_coef)
    sector = [space.index_of(label) for label in ('a,c', 'b,b', 'c,a')]
    expected = np.array([[2 * c.a_coef, c.c_coef, 0.0],
                         [c.c_coef, 4 * c.a_coef, c.c_coef],
                         [0.0, c.c_coef, 2 * c.a_coef]])
    assert np.allclose(matrix[np.ix_(sector, sector)], expected)
    periodic = build_h_xy(c, 2, Boundary.PERIODIC).to_dense()
    assert periodic[space.index_of('c,b'), space.index_of('b,c')] == pytest.approx(2 * c.c_coef)
    single = build_h_xy(c, 1).to_dense()
    assert np.allclose(single, np.diag([c.a_coef + c.b_coef, 2 * c.a_coef, c.a_coef - c.b_coef]))

def test_conservation_laws(fig2_coefficients, zz_params):
    for n_sites in (2, 3):
        h_xy = build_h_xy(fig2_coefficients, n_sites, Boundary.PERIODIC)
        assert _commutator_norm(h_xy.static, total_sz(n_sites)) < 1e-12
        h_zz = build_h_zz(compute_zz_coefficients(zz_params), n_sites, Boundary.PERIODIC)
        for site in range(1, n_sites + 1):
            local = spin_site_operator(n_sites, site, spin1_operators().sz)
            assert _commutator_norm(h_zz.static, local) < 1e-12

def test_zz_hamiltonian():
    operator = build_h_zz_direct(0.01, 0.005, 2)
    space = operator.space
    values = operator.static.diagonal().real
    assert values[space.index_of('a,c')] == pytest.approx(2 * 0.01 - 0.005)
    assert values[space.index_of('a,a')] == pytest.approx(2 * 0.01 + 0.005)
    assert values[space.index_of('b,b')] == 0.0
    assert operator.static.nnz <= operator.dimension

def test_zz_intermediate(zz_params, eliminated_space):
    space = eliminated_space
    operator = build_h_zz_intermediate(zz_params, space)
    assert operator.label == 'zz-intermediate-eq14'
    projector = sp.diags((space.level_table[:, 0] == 0).astype(complex))
    assert _commutator_norm(operator.static, projector) < 1e-12

def test_zz_intermediate_logs_violation(zz_params, eliminated_space, caplog):
    with caplog.at_level(logging.WARNING):
        build_h_zz_intermediate(replace(zz_params, g4=2.0), eliminated_space)
    assert 'violated' in caplog.text

def test_triplets(fig2_coefficients):
    triplets = build_h_xy(fig2_coefficients, 2).triplets()
    assert triplets == sorted(triplets, key=lambda item: (item[0], item[1]))
    assert all(im == 0.0 for _, _, _, im in triplets)

def test_eliminated_laser_stark_diagonal(fig2_params, eliminated_space):
    matrix = build_h_eliminated(fig2_params, eliminated_space).to_dense()
    index = eliminated_space.index_of('b,c')
    assert matrix[index, index].real == pytest.approx(-8.125, abs=1e-12)

def test_eliminated_respects_truncation(fig2_params, eliminated_space):
    operator = build_h_eliminated(fig2_params, eliminated_space)
    entries = sp.coo_matrix(operator.static)
    photons = eliminated_space.photon_table.sum(axis=1)
    assert (photons <= eliminated_space.photon_cap).all()
    assert np.abs(photons[entries.row] - photons[entries.col]).max() <= 1
    # Lower cap is an exact principal block of the higher one
    larger = build_space(2, AtomicLevels.THREE, TruncationKind.TOTAL_CAP, 3)
    index = [larger.index_of(*eliminated_space.label_of(i)) for i in range(eliminated_space.dimension)]
    block = build_h_eliminated(fig2_params, larger).to_dense()[np.ix_(index, index)]
    assert np.allclose(block, operator.to_dense(), rtol=0.0, atol=1e-14)
