# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           dynamics/service.py
# DESCRIPTION:    Propagation of pure states and mixtures
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

"""cavityspin - Propagation of pure states and mixtures

Three routes are available:

- dense eigendecomposition (static Hamiltonians up to `dense_limit`),
- Lanczos short-iteration propagation with adaptive substeps (static, any size),
- classic 4th-order Runge-Kutta with step-doubling error control (time-dependent).

All routes land exactly on grid points, nothing is interpolated.
"""

from __future__ import annotations
from typing import Optional, Sequence, Tuple
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import numpy as np
from scipy.linalg import eigh, eigh_tridiagonal
from firebird.base.logging import LoggingIdMixin, get_logger
from cavityspin.base import ModelError, PropagationError
from cavityspin.hilbert.api import StateVector, MixtureState
from cavityspin.operators.api import SparseHermitianOperator
from cavityspin.dynamics.api import (TimeGrid, PropagatorConfig, PropagationMethod, TrotterOrder,
                                     StateSeries, MixtureSeries)

#: Relative size of Lanczos residual treated as invariant-subspace breakdown
LANCZOS_BREAKDOWN: float = 1e-13
#: Relative time slack accepted as landing on grid point
LANDING_SLACK: float = 1e-14
#: Product-formula errors at or below this level are rounding noise of an exact step
EXACT_ERROR: float = 1e-10

@dataclass(frozen=True)
class TrotterScan:
    """Product-formula error versus step size.
    """
    total_time: float
    dts: Tuple[float, ...]
    errors: Tuple[float, ...]
    #: Log-log slope of error against step size
    slope: float

class Propagator(LoggingIdMixin):
    """Propagates states under `SparseHermitianOperator`.

    Arguments:
        config: Propagator configuration, defaults when not specified.
    """
    _logging_id_ = 'Propagator'
    def __init__(self, config: Optional[PropagatorConfig]=None):
        if config is None:
            config = PropagatorConfig()
        config.validate()
        #: Configuration
        self.config: PropagatorConfig = config
    def _check(self, hamiltonian: SparseHermitianOperator, psi0: StateVector) -> None:
        if psi0.space != hamiltonian.space:
            raise ModelError("Initial state and Hamiltonian belong to different spaces")
    def _eigendecomposition(self, hamiltonian: SparseHermitianOperator, psi0: np.ndarray,
                            times: np.ndarray) -> np.ndarray:
        energies, vectors = eigh(hamiltonian.to_dense())
        coeffs = vectors.conj().T @ psi0
        phases = np.exp(-1j * np.outer(times - times[0], energies))
        return (phases * coeffs) @ vectors.T
    def _lanczos(self, hamiltonian: SparseHermitianOperator, psi: np.ndarray,
                 tau: float) -> Tuple[np.ndarray, float]:
        """One Lanczos step e^{-iHτ}ψ with a-posteriori error estimate."""
        matrix = hamiltonian.static
        size = min(self.config.krylov_dim.value, psi.shape[0])
        beta0 = np.linalg.norm(psi)
        basis = np.zeros((size, psi.shape[0]), dtype=complex)
        alpha = np.zeros(size)
        beta = np.zeros(size)
        basis[0] = psi / beta0
        breakdown = False
        used = size
        for j in range(size):
            w = matrix @ basis[j]
            alpha[j] = np.vdot(basis[j], w).real
            for _ in range(2):
                w = w - basis[:j + 1].T @ (basis[:j + 1].conj() @ w)
            beta[j] = np.linalg.norm(w)
            if beta[j] <= LANCZOS_BREAKDOWN * max(1.0, abs(alpha[j])):
                breakdown = True
                used = j + 1
                break
            if j + 1 < size:
                basis[j + 1] = w / beta[j]
        if used == 1:
            evals, evecs = alpha[:1], np.ones((1, 1))
        else:
            evals, evecs = eigh_tridiagonal(alpha[:used], beta[:used - 1])
        coeffs = evecs @ (np.exp(-1j * tau * evals) * evecs[0])
        error = 0.0 if breakdown else float(beta0 * beta[used - 1] * abs(coeffs[-1]))
        return beta0 * (basis[:used].T @ coeffs), error
    def _krylov(self, hamiltonian: SparseHermitianOperator, psi0: np.ndarray,
                times: np.ndarray, metadata: dict) -> np.ndarray:
        tol = self.config.tolerance.value
        min_step = self.config.min_step.value
        result = np.empty((times.shape[0], psi0.shape[0]), dtype=complex)
        result[0] = psi = psi0
        tau = times[1] - times[0]
        substeps = 0
        for i in range(1, times.shape[0]):
            interval = times[i] - times[i - 1]
            remaining = interval
            while remaining > LANDING_SLACK * interval:
                step = min(tau, remaining)
                candidate, error = self._lanczos(hamiltonian, psi, step)
                if error <= tol:
                    psi = candidate
                    remaining -= step
                    substeps += 1
                    if step == tau:
                        tau *= 2.0
                else:
                    tau = step / 2.0
                    if tau < min_step:
                        raise PropagationError(f"Krylov substep underflow at t={times[i] - remaining:.6g}",
                                               time=times[i] - remaining)
            result[i] = psi
        metadata['substeps'] = substeps
        return result
    def _rk4(self, hamiltonian: SparseHermitianOperator, psi0: np.ndarray,
             times: np.ndarray, metadata: dict) -> np.ndarray:
        tol = self.config.tolerance.value
        max_step = self.config.max_step.value
        min_step = self.config.min_step.value
        def deriv(t, y):
            return -1j * hamiltonian.apply(t, y)
        def rk4(t, y, h, k1):
            k2 = deriv(t + h / 2.0, y + h / 2.0 * k1)
            k3 = deriv(t + h / 2.0, y + h / 2.0 * k2)
            k4 = deriv(t + h, y + h * k3)
            return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        result = np.empty((times.shape[0], psi0.shape[0]), dtype=complex)
        result[0] = psi = psi0
        t = times[0]
        h = min(max_step, times[1] - times[0])
        accepted = rejected = 0
        for i in range(1, times.shape[0]):
            target = times[i]
            while target - t > LANDING_SLACK * max(1.0, abs(target)):
                remaining = target - t
                step = min(h, remaining)
                k1 = deriv(t, psi)
                full = rk4(t, psi, step, k1)
                midpoint = rk4(t, psi, step / 2.0, k1)
                half = rk4(t + step / 2.0, midpoint, step / 2.0, deriv(t + step / 2.0, midpoint))
                error = float(np.linalg.norm(half - full)) / 15.0
                factor = 4.0 if error == 0.0 else 0.9 * (tol / error) ** 0.2
                if error <= tol:
                    accepted += 1
                    psi = half
                    t = target if step == remaining else t + step
                    if step == h:
                        h = min(max_step, h * min(4.0, max(1.0, factor)))
                else:
                    rejected += 1
                    h = step * max(0.1, factor)
                    if h < min_step:
                        raise PropagationError(f"Step size underflow at t={t:.6g} (h={h:.3g})", time=t)
            t = target
            result[i] = psi
        metadata.update(accepted_steps=accepted, rejected_steps=rejected)
        get_logger(self).debug(f"RK4 finished, {accepted} accepted and {rejected} rejected steps")
        return result
    def static(self, hamiltonian: SparseHermitianOperator, psi0: StateVector, grid: TimeGrid) -> StateSeries:
        """Evolves `psi0` (state at `grid.t_start`) under static Hamiltonian.

        Dimension above `dense_limit` switches eigendecomposition to Krylov; the fallback is
        recorded in metadata.

        Raises:
            ModelError: For time-dependent Hamiltonian or space mismatch.
        """
        self._check(hamiltonian, psi0)
        if hamiltonian.is_time_dependent:
            raise ModelError("Static propagation requires static Hamiltonian")
        method = self.config.method.value
        metadata = {'hamiltonian': hamiltonian.label, 'dimension': hamiltonian.dimension}
        if method is PropagationMethod.EIGENDECOMPOSITION and hamiltonian.dimension > self.config.dense_limit.value:
            get_logger(self).warning(f"Dimension {hamiltonian.dimension} above dense limit "
                                     f"{self.config.dense_limit.value}, falling back to Krylov")
            metadata['fallback'] = f"{method.value}->{PropagationMethod.KRYLOV.value}"
            method = PropagationMethod.KRYLOV
        metadata['route'] = method.value
        times = grid.times
        start = time.perf_counter()
        if method is PropagationMethod.EIGENDECOMPOSITION:
            amplitudes = self._eigendecomposition(hamiltonian, psi0.amplitudes, times)
        elif method is PropagationMethod.KRYLOV:
            amplitudes = self._krylov(hamiltonian, psi0.amplitudes, times, metadata)
        else:
            amplitudes = self._rk4(hamiltonian, psi0.amplitudes, times, metadata)
        metadata['elapsed'] = time.perf_counter() - start
        series = StateSeries(psi0.space, times, amplitudes, metadata)
        metadata['norm_drift'] = series.norm_drift()
        return series
    def timedep(self, hamiltonian: SparseHermitianOperator, psi0: StateVector, grid: TimeGrid) -> StateSeries:
        """Solves i dψ/dt = H(t)ψ from `grid.t_start` with adaptive RK4.

        Raises:
            ModelError: On space mismatch.
            PropagationError: On step underflow.
        """
        self._check(hamiltonian, psi0)
        metadata = {'hamiltonian': hamiltonian.label, 'dimension': hamiltonian.dimension,
                    'route': PropagationMethod.RK4_ADAPTIVE.value,
                    'tolerance': self.config.tolerance.value}
        times = grid.times
        start = time.perf_counter()
        amplitudes = self._rk4(hamiltonian, psi0.amplitudes, times, metadata)
        metadata['elapsed'] = time.perf_counter() - start
        series = StateSeries(psi0.space, times, amplitudes, metadata)
        metadata['norm_drift'] = series.norm_drift()
        return series
    def evolve(self, hamiltonian: SparseHermitianOperator, psi0: StateVector, grid: TimeGrid) -> StateSeries:
        """Dispatches to `timedep` or `static` by Hamiltonian kind.
        """
        if hamiltonian.is_time_dependent:
            return self.timedep(hamiltonian, psi0, grid)
        return self.static(hamiltonian, psi0, grid)
    def mixture(self, hamiltonian: SparseHermitianOperator, mixture: MixtureState, grid: TimeGrid, *,
                workers: int=1) -> MixtureSeries:
        """Evolves every mixture member independently, weights unchanged.
        """
        states = [state for _, state in mixture.members]
        if workers > 1 and len(states) > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                members = list(executor.map(lambda s: self.evolve(hamiltonian, s, grid), states))
        else:
            members = [self.evolve(hamiltonian, s, grid) for s in states]
        return MixtureSeries(mixture.weights, members)

def evolve_static(hamiltonian: SparseHermitianOperator, psi0: StateVector, grid: TimeGrid,
                  config: Optional[PropagatorConfig]=None) -> StateSeries:
    """Evolves state under static Hamiltonian, see `Propagator.static`.
    """
    return Propagator(config).static(hamiltonian, psi0, grid)

def evolve_timedep(hamiltonian: SparseHermitianOperator, psi0: StateVector, grid: TimeGrid,
                   config: Optional[PropagatorConfig]=None) -> StateSeries:
    """Evolves state under time-dependent Hamiltonian, see `Propagator.timedep`.
    """
    return Propagator(config).timedep(hamiltonian, psi0, grid)

def evolve_mixture(hamiltonian: SparseHermitianOperator, mixture: MixtureState, grid: TimeGrid,
                   config: Optional[PropagatorConfig]=None, *, workers: int=1) -> MixtureSeries:
    """Evolves mixture members independently, see `Propagator.mixture`.
    """
    return Propagator(config).mixture(hamiltonian, mixture, grid, workers=workers)

def _unitary(hamiltonian: SparseHermitianOperator, dt: float) -> np.ndarray:
    energies, vectors = eigh(hamiltonian.to_dense())
    return (vectors * np.exp(-1j * dt * energies)) @ vectors.conj().T

def _period(h_xy: SparseHermitianOperator, h_zz: SparseHermitianOperator, dt: float,
            order: TrotterOrder) -> np.ndarray:
    if h_xy.space != h_zz.space:
        raise ModelError("Product-formula operators must share one space")
    if h_xy.is_time_dependent or h_zz.is_time_dependent:
        raise ModelError("Product formula requires static operators")
    if dt <= 0.0:
        raise ModelError(f"Step dt must be positive, got {dt!r}")
    u_xy = _unitary(h_xy, dt)
    u_zz = _unitary(h_zz, dt)
    return u_zz @ u_xy if order is TrotterOrder.XY_FIRST else u_xy @ u_zz

def trotter_evolve(h_xy: SparseHermitianOperator, h_zz: SparseHermitianOperator, dt: float, n_steps: int,
                   psi0: StateVector, order: TrotterOrder=TrotterOrder.XY_FIRST) -> StateVector:
    """Returns [e^{-iH_zz dt} e^{-iH_xy dt}]^n_steps ψ₀ (XY factor first by default).

    Raises:
        ModelError: For space mismatch, non-positive `dt` or negative `n_steps`.
    """
    if n_steps < 0:
        raise ModelError("Number of steps must not be negative")
    if psi0.space != h_xy.space:
        raise ModelError("Initial state and operators belong to different spaces")
    period = _period(h_xy, h_zz, dt, order)
    psi = psi0.amplitudes.copy()
    for _ in range(n_steps):
        psi = period @ psi
    return StateVector(psi0.space, psi)

def trotter_series(h_xy: SparseHermitianOperator, h_zz: SparseHermitianOperator, psi0: StateVector,
                   grid: TimeGrid, substeps: int=8,
                   order: TrotterOrder=TrotterOrder.XY_FIRST) -> StateSeries:
    """Samples product-formula evolution on grid, `substeps` periods per sample interval.
    """
    if substeps < 1:
        raise ModelError("Number of substeps must be at least 1")
    if psi0.space != h_xy.space:
        raise ModelError("Initial state and operators belong to different spaces")
    dt = grid.spacing / substeps
    step = np.linalg.matrix_power(_period(h_xy, h_zz, dt, order), substeps)
    times = grid.times
    amplitudes = np.empty((times.shape[0], psi0.space.dimension), dtype=complex)
    amplitudes[0] = psi0.amplitudes
    for i in range(1, times.shape[0]):
        amplitudes[i] = step @ amplitudes[i - 1]
    return StateSeries(psi0.space, times, amplitudes,
                       {'route': 'trotter', 'dt': dt, 'order': order.value, 'substeps': substeps})

def trotter_error_scan(h_xy: SparseHermitianOperator, h_zz: SparseHermitianOperator, psi0: StateVector,
                       total_time: float, divisions: Sequence[int]=(64, 128, 256, 512),
                       order: TrotterOrder=TrotterOrder.XY_FIRST) -> TrotterScan:
    """Measures ‖ψ_trotter - e^{-i(H_xy+H_zz)T}ψ₀‖ for dt = T/n over `divisions`.

    Returns errors with log-log slope fitted over points with error above `EXACT_ERROR`.
    The slope is NaN when fewer than two such points remain.
    """
    if len(divisions) < 2:
        raise ModelError("Error scan needs at least two divisions")
    total = SparseHermitianOperator(h_xy.space, h_xy.static + h_zz.static, label='xy+zz')
    exact = _unitary(total, total_time) @ psi0.amplitudes
    dts, errors = [], []
    for n in divisions:
        dt = total_time / n
        approx = trotter_evolve(h_xy, h_zz, dt, n, psi0, order)
        dts.append(dt)
        errors.append(float(np.linalg.norm(approx.amplitudes - exact)))
    fitted = [(dt, err) for dt, err in zip(dts, errors) if err > EXACT_ERROR]
    if len(fitted) < 2:
        slope = math.nan
    else:
        x, y = zip(*fitted)
        slope = float(np.polyfit(np.log(x), np.log(y), 1)[0])
    return TrotterScan(total_time, tuple(dts), tuple(errors), slope)
