# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           operators/service.py
# DESCRIPTION:    Hamiltonian builders and spin-1 operator algebra
# CREATED:        14.03.2024
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

"""cavityspin - Hamiltonian builders and spin-1 operator algebra

Builders assemble every off-diagonal part as X and return D + (X + X†) with real diagonal D,
so static operators are Hermitian to the last bit.
"""

from __future__ import annotations
from typing import List, Tuple
import math
import numpy as np
import scipy.sparse as sp
from firebird.base.logging import get_logger
from cavityspin.base import ModelError, Boundary, CheckStatus
from cavityspin.hilbert.api import HilbertSpace, AtomicLevels, TruncationKind
from cavityspin.hilbert.service import build_space
from cavityspin.model.api import ModelParams, ZzParams, XyCoefficients, ZzCoefficients, ValidationThresholds
from cavityspin.model.service import validate_zz_params
from cavityspin.operators.api import SparseHermitianOperator, Spin1Operators

# Level indices in basis order
LEVEL_A, LEVEL_B, LEVEL_C, LEVEL_D, LEVEL_E = range(5)

SQRT2 = math.sqrt(2.0)

def spin1_operators() -> Spin1Operators:
    """Returns single-site spin-1 matrices on (a, b, c).
    """
    sz = np.diag([1.0, 0.0, -1.0]).astype(complex)
    splus = np.zeros((3, 3), dtype=complex)
    splus[LEVEL_A, LEVEL_B] = SQRT2
    splus[LEVEL_B, LEVEL_C] = SQRT2
    sminus = splus.conj().T
    return Spin1Operators(sz=sz, splus=splus, sminus=sminus, sx=(splus + sminus) / 2.0,
                          sy=(splus - sminus) / 2j)

def chain_links(n_sites: int, boundary: Boundary) -> List[Tuple[int, int]]:
    """Returns nearest-neighbour links as 0-based site pairs.

    Periodic chains add the wrap link (N-1, 0) for N >= 2, so N=2 counts its single link twice.
    """
    links = [(j, j + 1) for j in range(n_sites - 1)]
    if boundary is Boundary.PERIODIC and n_sites >= 2:
        links.append((n_sites - 1, 0))
    return links

def _ket_bra(count: int, upper: int, lower: int) -> sp.csr_matrix:
    return sp.csr_matrix(([1.0], ([upper], [lower])), shape=(count, count), dtype=complex)

def _atomic_site(space: HilbertSpace, site: int, local) -> sp.csr_matrix:
    count = space.atomic_levels.count
    left = sp.identity(count ** site, dtype=complex, format='csr')
    right = sp.identity(count ** (space.n_sites - site - 1), dtype=complex, format='csr')
    return sp.kron(sp.kron(left, sp.csr_matrix(local, dtype=complex), format='csr'), right, format='csr')

def _photon_annihilation(space: HilbertSpace, site: int) -> sp.csr_matrix:
    rows, cols, values = [], [], []
    for col, occ in enumerate(space.photon_states):
        n = occ[site]
        if n:
            rows.append(space.photon_index(occ[:site] + (n - 1,) + occ[site + 1:]))
            cols.append(col)
            values.append(math.sqrt(n))
    size = space.photon_dimension
    return sp.csr_matrix((values, (rows, cols)), shape=(size, size), dtype=complex)

def _photon_number(space: HilbertSpace, site: int) -> sp.csr_matrix:
    return sp.diags([float(occ[site]) for occ in space.photon_states], format='csr').astype(complex)

def _embed(space: HilbertSpace, atomic=None, photonic=None) -> sp.csr_matrix:
    if atomic is None:
        atomic = sp.identity(space.atomic_dimension, dtype=complex, format='csr')
    if photonic is None:
        photonic = sp.identity(space.photon_dimension, dtype=complex, format='csr')
    return sp.kron(atomic, photonic, format='csr')

def _transition(space: HilbertSpace, site: int, upper: int, lower: int, photon=None) -> sp.csr_matrix:
    """|upper⟩⟨lower| at `site`, optionally times photon operator of the same cavity."""
    local = _ket_bra(space.atomic_levels.count, upper, lower)
    return _embed(space, _atomic_site(space, site, local), photon)

def _hopping(space: HilbertSpace, j_hop: float, boundary: Boundary) -> sp.csr_matrix:
    """Upper half Σ J a_j† a_k of the hopping term."""
    result = sp.csr_matrix((space.dimension, space.dimension), dtype=complex)
    if j_hop == 0.0 or not space.has_photons:
        return result
    lowering = [_photon_annihilation(space, j) for j in range(space.n_sites)]
    for j, k in chain_links(space.n_sites, boundary):
        result = result + j_hop * _embed(space, photonic=lowering[j].conj().T @ lowering[k])
    return result

def _hermitian(diagonal: sp.spmatrix, offdiagonal: sp.spmatrix) -> sp.csr_matrix:
    return (diagonal + (offdiagonal + offdiagonal.conj().T)).tocsr()

def _require_levels(space: HilbertSpace, levels: AtomicLevels, n_sites: int) -> None:
    if space.atomic_levels is not levels:
        raise ModelError(f"Operator requires {levels.name.lower()}-level space, "
                         f"got {space.atomic_levels.name.lower()}-level space")
    if space.n_sites != n_sites:
        raise ModelError(f"Parameters describe {n_sites} sites, space has {space.n_sites}")

def spin_site_operator(n_sites: int, site: int, local: np.ndarray) -> sp.csr_matrix:
    """Embeds 3×3 operator acting on `site` (1-based) into the 3^N spin chain.
    """
    if not 1 <= site <= n_sites:
        raise ModelError(f"Site must be in 1..{n_sites}, got {site!r}")
    left = sp.identity(3 ** (site - 1), dtype=complex, format='csr')
    right = sp.identity(3 ** (n_sites - site), dtype=complex, format='csr')
    return sp.kron(sp.kron(left, sp.csr_matrix(local, dtype=complex), format='csr'), right, format='csr')

def total_sz(n_sites: int) -> sp.csr_matrix:
    """Returns Σⱼ S_zj on the 3^N spin chain.
    """
    sz = spin1_operators().sz
    result = sp.csr_matrix((3 ** n_sites, 3 ** n_sites), dtype=complex)
    for site in range(1, n_sites + 1):
        result = result + spin_site_operator(n_sites, site, sz)
    return result

def build_h_full(p: ModelParams, space: HilbertSpace) -> SparseHermitianOperator:
    """Builds the interaction-picture Hamiltonian of the five-level scheme.

    Four phase-carrying groups with frequencies Δ₁..Δ₄:

    - (g₁ a_j |d⟩⟨a| + Ω₁ |d⟩⟨b|) e^{iΔ₁t}
    - (g₂ a_j |d⟩⟨b| + Ω₂ |d⟩⟨a|) e^{iΔ₂t}
    - (g₃ a_j |e⟩⟨b| + Ω₃ |e⟩⟨c|) e^{iΔ₃t}
    - (g₄ a_j |e⟩⟨c| + Ω₄ |e⟩⟨b|) e^{iΔ₄t}

    plus Hermitian conjugates and static hopping J Σ (a_j† a_k + h.c.).

    Raises:
        ModelError: When space is not a five-level space of matching length.
    """
    _require_levels(space, AtomicLevels.FIVE, p.n_sites)
    groups = ((p.d1, p.g1, LEVEL_D, LEVEL_A, p.om1, LEVEL_D, LEVEL_B),
              (p.d2, p.g2, LEVEL_D, LEVEL_B, p.om2, LEVEL_D, LEVEL_A),
              (p.d3, p.g3, LEVEL_E, LEVEL_B, p.om3, LEVEL_E, LEVEL_C),
              (p.d4, p.g4, LEVEL_E, LEVEL_C, p.om4, LEVEL_E, LEVEL_B))
    zero = sp.csr_matrix((space.dimension, space.dimension), dtype=complex)
    terms = []
    for delta, g, g_up, g_low, om, om_up, om_low in groups:
        matrix = zero
        for j in range(space.n_sites):
            matrix = matrix + g * _transition(space, j, g_up, g_low, _photon_annihilation(space, j))
            matrix = matrix + om * _transition(space, j, om_up, om_low)
        terms.append((matrix, delta))
    return SparseHermitianOperator(space, _hermitian(zero, _hopping(space, p.j_hop, p.boundary)), terms,
                                   label='full-eq1')

def build_h_eliminated(p: ModelParams, space: HilbertSpace) -> SparseHermitianOperator:
    """Builds the static Hamiltonian after eliminating the excited levels d and e.

    Per site: photon-number Stark shifts, laser Stark shifts and four cavity-assisted Raman
    transitions; plus hopping.

    Raises:
        ModelError: When space is not a three-level space of matching length.
    """
    _require_levels(space, AtomicLevels.THREE, p.n_sites)
    photon_stark = np.diag([p.g1 ** 2 / p.d1, p.g2 ** 2 / p.d2 + p.g3 ** 2 / p.d3, p.g4 ** 2 / p.d4])
    laser_stark = np.diag([p.om2 ** 2 / p.d2, p.om1 ** 2 / p.d1 + p.om4 ** 2 / p.d4, p.om3 ** 2 / p.d3])
    raman = ((p.om1 * p.g1 / p.d1, LEVEL_B, LEVEL_A),
             (p.om2 * p.g2 / p.d2, LEVEL_A, LEVEL_B),
             (p.om3 * p.g3 / p.d3, LEVEL_C, LEVEL_B),
             (p.om4 * p.g4 / p.d4, LEVEL_B, LEVEL_C))
    diagonal = sp.csr_matrix((space.dimension, space.dimension), dtype=complex)
    offdiagonal = _hopping(space, p.j_hop, p.boundary)
    for j in range(space.n_sites):
        diagonal = diagonal - _embed(space, _atomic_site(space, j, photon_stark), _photon_number(space, j))
        diagonal = diagonal - _embed(space, _atomic_site(space, j, laser_stark))
        lowering = _photon_annihilation(space, j)
        for coef, upper, lower in raman:
            if coef:
                offdiagonal = offdiagonal - coef * _transition(space, j, upper, lower, lowering)
    return SparseHermitianOperator(space, _hermitian(diagonal, offdiagonal), label='eliminated-eq2')

def build_h_xy(c: XyCoefficients, n_sites: int, boundary: Boundary=Boundary.OPEN) -> SparseHermitianOperator:
    """Builds Σⱼ A(S_x²+S_y²)ⱼ + B S_zj + C Σ_links (S_xj S_xk + S_yj S_yk) on the 3^N chain.

    The exchange term is assembled as R_j R_k† + R_j† R_k with R = |a⟩⟨b| + |b⟩⟨c|, which equals
    (S₊ⱼS₋ₖ + S₋ⱼS₊ₖ)/2 with the √2 factors cancelled exactly.
    """
    space = build_space(n_sites, AtomicLevels.THREE, TruncationKind.TOTAL_CAP, 0)
    on_site = c.a_coef * np.diag([1.0, 2.0, 1.0]) + c.b_coef * np.diag([1.0, 0.0, -1.0])
    diagonal = sp.csr_matrix((space.dimension, space.dimension), dtype=complex)
    for j in range(1, n_sites + 1):
        diagonal = diagonal + spin_site_operator(n_sites, j, on_site)
    raising = np.zeros((3, 3))
    raising[LEVEL_A, LEVEL_B] = raising[LEVEL_B, LEVEL_C] = 1.0
    offdiagonal = sp.csr_matrix((space.dimension, space.dimension), dtype=complex)
    if c.c_coef:
        for j, k in chain_links(n_sites, boundary):
            offdiagonal = offdiagonal + c.c_coef * (spin_site_operator(n_sites, j + 1, raising)
                                                    @ spin_site_operator(n_sites, k + 1, raising.T))
    return SparseHermitianOperator(space, _hermitian(diagonal, offdiagonal), label='spin-xy-eq11')

def build_h_zz_full(p: ZzParams, space: HilbertSpace) -> SparseHermitianOperator:
    """Builds the interaction-picture Hamiltonian of the two-laser scheme.

    Groups (g₁ a_j + Ω₂)|d⟩⟨a| e^{iΔ₁′t} and (g₄ a_j + Ω₃)|e⟩⟨c| e^{iΔ₃′t}, their conjugates,
    and static hopping.

    Raises:
        ModelError: When space is not a five-level space of matching length.
    """
    _require_levels(space, AtomicLevels.FIVE, p.n_sites)
    zero = sp.csr_matrix((space.dimension, space.dimension), dtype=complex)
    terms = []
    for delta, g, om, upper, lower in ((p.d1p, p.g1, p.om2, LEVEL_D, LEVEL_A),
                                       (p.d3p, p.g4, p.om3, LEVEL_E, LEVEL_C)):
        matrix = zero
        for j in range(space.n_sites):
            matrix = matrix + g * _transition(space, j, upper, lower, _photon_annihilation(space, j))
            matrix = matrix + om * _transition(space, j, upper, lower)
        terms.append((matrix, delta))
    return SparseHermitianOperator(space, _hermitian(zero, _hopping(space, p.j_hop, p.boundary)), terms,
                                   label='zz-full-eq13')

def build_h_zz_intermediate(p: ZzParams, space: HilbertSpace,
                            thresholds: ValidationThresholds=None) -> SparseHermitianOperator:
    """Builds the static two-laser Hamiltonian after eliminating d and e.

    Per site: photon Stark shift -(g₁²/Δ₁′)(|a⟩⟨a|+|c⟩⟨c|)a†a, laser Stark shifts
    -Ω₂²/Δ₁′|a⟩⟨a| - Ω₃²/Δ₃′|c⟩⟨c| and drive -(Ω₂g₁/Δ₁′)(a_j S_zj + h.c.); plus hopping in
    position form.

    Violated matching conditions are logged as warnings, the operator is still built.

    Raises:
        ModelError: When space is not a three-level space of matching length.
    """
    _require_levels(space, AtomicLevels.THREE, p.n_sites)
    report = validate_zz_params(p, thresholds)
    for name in ('stark_match', 'drive_match'):
        check = report.get(name)
        if check.status is CheckStatus.FAIL:
            get_logger(space).warning(f"Condition '{check.description}' violated, residual {check.value:.3g}")
    u_coef = p.g1 ** 2 / p.d1p
    photon_stark = np.diag([u_coef, 0.0, u_coef])
    laser_stark = np.diag([p.om2 ** 2 / p.d1p, 0.0, p.om3 ** 2 / p.d3p])
    drive = p.om2 * p.g1 / p.d1p
    sz = np.diag([1.0, 0.0, -1.0])
    diagonal = sp.csr_matrix((space.dimension, space.dimension), dtype=complex)
    offdiagonal = _hopping(space, p.j_hop, p.boundary)
    for j in range(space.n_sites):
        diagonal = diagonal - _embed(space, _atomic_site(space, j, photon_stark), _photon_number(space, j))
        diagonal = diagonal - _embed(space, _atomic_site(space, j, laser_stark))
        if drive:
            offdiagonal = offdiagonal - drive * _embed(space, _atomic_site(space, j, sz),
                                                       _photon_annihilation(space, j))
    return SparseHermitianOperator(space, _hermitian(diagonal, offdiagonal), label='zz-intermediate-eq14')

def build_h_zz(c: ZzCoefficients, n_sites: int, boundary: Boundary=Boundary.OPEN) -> SparseHermitianOperator:
    """Builds diagonal Σⱼ α S_zj² + β Σ_links S_zj S_zk on the 3^N chain.
    """
    space = build_space(n_sites, AtomicLevels.THREE, TruncationKind.TOTAL_CAP, 0)
    m = 1.0 - space.level_table.astype(float)
    values = c.alpha * (m ** 2).sum(axis=1)
    for j, k in chain_links(n_sites, boundary):
        values = values + c.beta * m[:, j] * m[:, k]
    return SparseHermitianOperator(space, sp.diags(values.astype(complex), format='csr'), label='zz-eq15')

def build_h_zz_direct(alpha: float, beta: float, n_sites: int,
                      boundary: Boundary=Boundary.OPEN) -> SparseHermitianOperator:
    """Builds S_z S_z chain from explicit (α, β), used for product-formula studies.
    """
    return build_h_zz(ZzCoefficients(u_coef=math.nan, alpha=alpha, beta=beta), n_sites, boundary)
