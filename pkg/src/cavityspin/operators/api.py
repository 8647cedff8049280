# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           operators/api.py
# DESCRIPTION:    API for sparse Hermitian operators
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

"""cavityspin - API for sparse Hermitian operators

Time-dependent operators are stored as a static part S plus term list (T_m, ω_m):

    H(t) = S + Σ_m (T_m e^{iω_m t} + T_m† e^{-iω_m t})

and materialized on demand.
"""

from __future__ import annotations
from typing import List, Sequence, Tuple
from dataclasses import dataclass
import numpy as np
import scipy.sparse as sp
from cavityspin.base import ModelError
from cavityspin.hilbert.api import HilbertSpace

@dataclass(frozen=True)
class Spin1Operators:
    """Single-site spin-1 matrices on basis (a, b, c) = (m=+1, 0, -1).
    """
    sz: np.ndarray
    splus: np.ndarray
    sminus: np.ndarray
    sx: np.ndarray
    sy: np.ndarray

class SparseHermitianOperator:
    """Hermitian operator over `HilbertSpace`, optionally time-dependent.

    Arguments:
        space: Hilbert space.
        static: Static Hermitian part.
        terms: Phase-carrying parts as (T_m, ω_m) pairs.
        label: Name used in logs and run metadata.

    Raises:
        ModelError: On shape mismatch.
    """
    def __init__(self, space: HilbertSpace, static: sp.spmatrix,
                 terms: Sequence[Tuple[sp.spmatrix, float]]=(), label: str=''):
        dim = space.dimension
        static = sp.csr_matrix(static, dtype=complex)
        if static.shape != (dim, dim):
            raise ModelError(f"Operator shape {static.shape} does not match dimension {dim}")
        #: Hilbert space
        self.space: HilbertSpace = space
        #: Static part
        self.static: sp.csr_matrix = static
        #: Label
        self.label: str = label
        self._terms: List[Tuple[sp.csr_matrix, sp.csr_matrix, float]] = []
        for matrix, omega in terms:
            matrix = sp.csr_matrix(matrix, dtype=complex)
            if matrix.shape != (dim, dim):
                raise ModelError(f"Term shape {matrix.shape} does not match dimension {dim}")
            if matrix.nnz:
                self._terms.append((matrix, matrix.conj().T.tocsr(), float(omega)))
    def __repr__(self):
        kind = 'time-dependent' if self.is_time_dependent else 'static'
        return f"SparseHermitianOperator({self.label!r}, {kind}, dimension={self.dimension})"
    def at(self, t: float=0.0) -> sp.csr_matrix:
        """Returns matrix H(t).
        """
        if not self._terms:
            return self.static
        drive = sp.csr_matrix(self.static.shape, dtype=complex)
        for matrix, _, omega in self._terms:
            drive = drive + matrix * np.exp(1j * omega * t)
        return (self.static + (drive + drive.conj().T)).tocsr()
    def apply(self, t: float, psi: np.ndarray) -> np.ndarray:
        """Returns H(t)ψ without materializing H(t).
        """
        result = self.static @ psi
        for matrix, adjoint, omega in self._terms:
            phase = np.exp(1j * omega * t)
            result = result + phase * (matrix @ psi) + np.conj(phase) * (adjoint @ psi)
        return result
    def to_dense(self, t: float=0.0) -> np.ndarray:
        "Returns H(t) as dense array."
        return self.at(t).toarray()
    def hermiticity_residual(self, t: float=0.0) -> float:
        """Returns max |H(t) - H(t)†| over all entries.
        """
        diff = self.at(t) - self.at(t).conj().T
        return float(abs(diff).max()) if diff.nnz else 0.0
    def triplets(self, t: float=0.0) -> List[Tuple[int, int, float, float]]:
        """Returns nonzero entries of H(t) as (row, col, re, im), row-major.
        """
        coo = self.at(t).tocoo()
        order = np.lexsort((coo.col, coo.row))
        return [(int(coo.row[i]), int(coo.col[i]), float(coo.data[i].real), float(coo.data[i].imag))
                for i in order if coo.data[i] != 0]
    @property
    def is_time_dependent(self) -> bool:
        "True when operator has phase-carrying terms."
        return bool(self._terms)
    @property
    def dimension(self) -> int:
        "Operator dimension."
        return self.space.dimension
    @property
    def frequencies(self) -> Tuple[float, ...]:
        "Phase frequencies of time-dependent terms."
        return tuple(omega for _, _, omega in self._terms)
