# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           cli/service.py
# DESCRIPTION:    Scenario loading, running, comparison and CSV output
# CREATED:        20.03.2024
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

"""cavityspin - Scenario loading, running, comparison and CSV output
"""

from __future__ import annotations
from typing import Dict, List, Optional, Sequence, Tuple, Union
import os
import json
import time
from pathlib import Path
from configparser import ConfigParser
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
import numpy as np
from firebird.base.config import EnvExtendedInterpolation
from firebird.base.logging import LoggingIdMixin, get_logger
from cavityspin.base import Error, ModelError, CheckStatus
from cavityspin.model.api import (XyParamsConfig, ZzParamsConfig, ThresholdsConfig, ValidationThresholds,
                                  ValidationReport)
from cavityspin.model.service import (validate_xy_params, validate_zz_params, compute_xy_coefficients,
                                      compute_zz_coefficients)
from cavityspin.hilbert.api import AtomicLevels, HilbertSpace, StateVector
from cavityspin.hilbert.service import build_space, parse_state_spec
from cavityspin.operators.api import SparseHermitianOperator
from cavityspin.operators.service import (build_h_full, build_h_eliminated, build_h_xy, build_h_zz_full,
                                          build_h_zz_intermediate, build_h_zz, build_h_zz_direct)
from cavityspin.dynamics.api import PropagatorConfig, TimeGrid
from cavityspin.dynamics.service import Propagator, trotter_series, trotter_error_scan
from cavityspin.observables.api import TimeSeries
from cavityspin.observables.service import channel_series
from cavityspin.cli.api import (OUTPUT_DIR_ENV, BUILTIN_RECIPES, ModelKind, ParamFamily, ScenarioConfig,
                                Scenario, RunRecord, DeviationSummary)

#: Suffix of JSON record written next to CSV output
RECORD_SUFFIX = '.json'

def create_parser() -> ConfigParser:
    """Returns `ConfigParser` used for scenario files (``${env:NAME}`` interpolation).
    """
    return ConfigParser(interpolation=EnvExtendedInterpolation())

def _echo(parser: ConfigParser, sections: Sequence[str]) -> str:
    lines = []
    for section in sections:
        lines.append(f"[{section}]")
        lines.extend(f"{key} = {parser.get(section, key)}" for key in parser.options(section))
        lines.append('')
    return '\n'.join(lines)

def load_scenario(parser: ConfigParser, section: str='scenario', name: str=None) -> Scenario:
    """Builds validated `Scenario` from parsed configuration.

    Arguments:
        parser: Parsed scenario file(s).
        section: Scenario section name.
        name: Scenario name, section name when not specified.

    Raises:
        Error: For missing sections or invalid options.
    """
    if not parser.has_section(section):
        raise Error(f"Missing configuration section '{section}'")
    config = ScenarioConfig(section)
    config.load_config(parser, section)
    config.validate()
    sections = [section]
    family = config.param_family()
    params_name = config.params.value
    if not parser.has_section(params_name):
        raise Error(f"Missing parameter section '{params_name}'")
    params_config = XyParamsConfig(params_name) if family is ParamFamily.XY else ZzParamsConfig(params_name)
    params_config.load_config(parser, params_name)
    params_config.validate()
    sections.append(params_name)
    thresholds = ValidationThresholds()
    if config.thresholds.value is not None:
        thresholds_config = ThresholdsConfig(config.thresholds.value)
        thresholds_config.load_config(parser, config.thresholds.value)
        thresholds_config.validate()
        thresholds = thresholds_config.to_thresholds()
        sections.append(config.thresholds.value)
    propagator = PropagatorConfig()
    if config.propagator.value is not None:
        propagator = PropagatorConfig(config.propagator.value)
        propagator.load_config(parser, config.propagator.value)
        propagator.validate()
        sections.append(config.propagator.value)
    return Scenario(name or section, config, params_config.to_params(), thresholds, propagator,
                    _echo(parser, sections))

def read_scenario(path: Union[str, Path], section: str='scenario') -> Scenario:
    """Reads scenario from INI file, named by file stem.

    Raises:
        Error: When file cannot be read or holds invalid scenario.
    """
    path = Path(path)
    parser = create_parser()
    if not parser.read(path, encoding='utf8'):
        raise Error(f"Cannot read scenario file '{path}'")
    return load_scenario(parser, section, path.stem)

def builtin_scenario(name: str) -> Scenario:
    """Returns built-in scenario.

    Raises:
        Error: For unknown scenario name.
    """
    recipe = BUILTIN_RECIPES.get(name)
    if recipe is None:
        raise Error(f"Unknown built-in scenario '{name}'", name=name)
    parser = create_parser()
    parser.read_string(recipe)
    return load_scenario(parser, 'scenario', name)

class ScenarioRunner(LoggingIdMixin):
    """Runs scenario through parameter validation, model building and propagation.

    Arguments:
        scenario: Scenario to run.
        override: Run even when parameter validation fails.
        workers: Worker threads for mixture members.
    """
    _logging_id_ = 'ScenarioRunner'
    def __init__(self, scenario: Scenario, *, override: bool=False, workers: int=1):
        #: Scenario
        self.scenario: Scenario = scenario
        #: Run even when parameter validation fails
        self.override: bool = override or scenario.config.allow_invalid.value
        self.propagator: Propagator = Propagator(scenario.propagator)
        self.workers: int = workers
    def validate(self) -> ValidationReport:
        """Returns validation report of scenario parameters.
        """
        if self.scenario.config.param_family() is ParamFamily.XY:
            return validate_xy_params(self.scenario.params, self.scenario.thresholds)
        return validate_zz_params(self.scenario.params, self.scenario.thresholds)
    def _space(self, levels: AtomicLevels) -> HilbertSpace:
        cfg = self.scenario.config
        return build_space(self.scenario.params.n_sites, levels, cfg.truncation.value, cfg.photon_cap.value)
    def _evolve(self, hamiltonian: SparseHermitianOperator, grid: TimeGrid):
        state = parse_state_spec(hamiltonian.space, self.scenario.config.initial_state.value)
        if isinstance(state, StateVector):
            return self.propagator.evolve(hamiltonian, state, grid)
        return self.propagator.mixture(hamiltonian, state, grid, workers=self.workers)
    def _trotter(self, grid: TimeGrid, coefficients, metadata: Dict) -> List[Tuple[str, object]]:
        cfg = self.scenario.config
        params = self.scenario.params
        h_xy = build_h_xy(coefficients, params.n_sites, params.boundary)
        h_zz = build_h_zz_direct(cfg.zz_alpha.value, cfg.zz_beta.value, params.n_sites, params.boundary)
        psi0 = parse_state_spec(h_xy.space, cfg.initial_state.value)
        if not isinstance(psi0, StateVector):
            raise ModelError("Product formula requires pure initial state")
        approx = trotter_series(h_xy, h_zz, psi0, grid, cfg.trotter_substeps.value, cfg.trotter_order.value)
        total = SparseHermitianOperator(h_xy.space, h_xy.static + h_zz.static, label='xy+zz')
        exact = self.propagator.static(total, psi0, grid)
        if cfg.sweep_divisions.value:
            total_time = cfg.sweep_time.value
            if total_time is None:
                total_time = 10.0 / coefficients.c_coef
            scan = trotter_error_scan(h_xy, h_zz, psi0, total_time, cfg.sweep_divisions.value,
                                      cfg.trotter_order.value)
            get_logger(self).info(f"Product-formula error slope {scan.slope:.3f}")
            metadata['trotter_scan'] = {'total_time': scan.total_time, 'dts': list(scan.dts),
                                        'errors': list(scan.errors), 'slope': scan.slope}
        return [('trotter', approx), ('exact', exact)]
    def _simulate(self, kind: ModelKind, grid: TimeGrid, coefficients,
                  metadata: Dict) -> List[Tuple[str, object]]:
        params = self.scenario.params
        if kind is ModelKind.TROTTER_XY_ZZ:
            return self._trotter(grid, coefficients, metadata)
        if kind is ModelKind.FULL_EQ1:
            hamiltonian = build_h_full(params, self._space(AtomicLevels.FIVE))
        elif kind is ModelKind.ELIMINATED_EQ2:
            hamiltonian = build_h_eliminated(params, self._space(AtomicLevels.THREE))
        elif kind is ModelKind.SPIN_XY_EQ11:
            hamiltonian = build_h_xy(coefficients, params.n_sites, params.boundary)
        elif kind is ModelKind.ZZ_FULL_EQ13:
            hamiltonian = build_h_zz_full(params, self._space(AtomicLevels.FIVE))
        elif kind is ModelKind.ZZ_INTERMEDIATE_EQ14:
            hamiltonian = build_h_zz_intermediate(params, self._space(AtomicLevels.THREE),
                                                  self.scenario.thresholds)
        else:
            hamiltonian = build_h_zz(coefficients, params.n_sites, params.boundary)
        get_logger(self).debug(f"Model {kind.value}, dimension {hamiltonian.dimension}")
        return [(kind.suffix, self._evolve(hamiltonian, grid))]
    def run(self) -> RunRecord:
        """Runs the scenario.

        Raises:
            ValidationFailed: When validation fails and override is not set.
            SingularRegimeError: When effective coefficients are undefined.
            DimensionLimitError: When a basis exceeds the dimension cap.
            PropagationError: On numeric abort.
        """
        scenario = self.scenario
        cfg = scenario.config
        log = get_logger(self)
        started = datetime.now(timezone.utc)
        start = time.perf_counter()
        log.info(f"Scenario '{scenario.name}' started")
        report = self.validate()
        if report.overall is CheckStatus.FAIL:
            if not self.override:
                report.raise_on_fail()
            log.warning(f"Scenario '{scenario.name}' runs with failed validation (override)")
        elif report.overall is CheckStatus.WARN:
            warned = ', '.join(c.name for c in report if c.status is CheckStatus.WARN)
            log.warning(f"Validation warnings: {warned}")
        if cfg.param_family() is ParamFamily.XY:
            coefficients = compute_xy_coefficients(scenario.params)
        else:
            coefficients = compute_zz_coefficients(scenario.params)
        metadata = {'started': started.isoformat(),
                    'models': [kind.value for kind in cfg.model_kinds()],
                    'boundary': scenario.params.boundary.value,
                    'truncation': cfg.truncation.value.value,
                    'photon_cap': cfg.photon_cap.value,
                    'initial_state': cfg.initial_state.value,
                    'window': [cfg.t_start.value, cfg.t_end.value, cfg.samples.value],
                    'routes': {}}
        series = None
        kinds = cfg.model_kinds()
        if kinds:
            grid = TimeGrid(cfg.t_start.value, cfg.t_end.value, cfg.samples.value)
            sources = []
            for kind in kinds:
                sources.extend(self._simulate(kind, grid, coefficients, metadata))
            series = TimeSeries(grid.times)
            for suffix, trajectory in sources:
                part = channel_series(trajectory, cfg.channels.value, suffix if len(sources) > 1 else '')
                for name in part.names:
                    series.add(name, part[name])
                members = getattr(trajectory, 'members', [trajectory])
                metadata['routes'][suffix] = [dict(m.metadata) for m in members]
        metadata['elapsed'] = time.perf_counter() - start
        log.info(f"Scenario '{scenario.name}' finished in {metadata['elapsed']:.3f}s")
        return RunRecord(scenario, report, coefficients.as_dict(), series, metadata)

def run_scenario(scenario: Scenario, *, override: bool=False, workers: int=1) -> RunRecord:
    """Runs scenario, see `ScenarioRunner.run`.
    """
    return ScenarioRunner(scenario, override=override, workers=workers).run()

def run_batch(scenarios: Sequence[Scenario], *, jobs: int=1, override: bool=False) -> List[RunRecord]:
    """Runs independent scenarios, in parallel when `jobs` > 1. Results keep input order.
    """
    if jobs > 1 and len(scenarios) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            return list(executor.map(lambda s: run_scenario(s, override=override), scenarios))
    return [run_scenario(s, override=override) for s in scenarios]

def output_path(record: RunRecord, output_dir: Optional[Union[str, Path]]=None) -> Path:
    """Returns CSV path of the record.

    The directory is taken from `output_dir`, else from environment variable
    ``CAVITYSPIN_OUTPUT_DIR``, else from the configured path.
    """
    path = Path(record.scenario.config.output.value or f"{record.scenario.name}.csv")
    if output_dir is None:
        output_dir = os.environ.get(OUTPUT_DIR_ENV)
    if output_dir:
        path = Path(output_dir) / path.name
    return path

def write_csv(series: TimeSeries, path: Union[str, Path]) -> Path:
    """Writes series as CSV: column ``t`` then one column per channel, full precision.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = np.column_stack([series.times] + [series[name] for name in series.names])
    np.savetxt(path, data, fmt='%.17g', delimiter=',', header=','.join(('t',) + series.names), comments='')
    return path

def read_csv(path: Union[str, Path]) -> TimeSeries:
    """Reads CSV written by `write_csv`.

    Raises:
        Error: When file cannot be read or has no ``t`` column.
    """
    path = Path(path)
    try:
        with path.open(encoding='utf8') as stream:
            header = stream.readline().strip().split(',')
        data = np.loadtxt(path, delimiter=',', skiprows=1, ndmin=2)
    except (OSError, ValueError) as exc:
        raise Error(f"Cannot read CSV file '{path}'") from exc
    if not header or header[0] != 't':
        raise Error(f"File '{path}' has no 't' column")
    return TimeSeries(data[:, 0], {name: data[:, i + 1] for i, name in enumerate(header[1:])})

def write_record(record: RunRecord, output_dir: Optional[Union[str, Path]]=None) -> Optional[Path]:
    """Writes CSV (when the run has series) and JSON record. Returns CSV path or None.
    """
    path = output_path(record, output_dir)
    if record.series is not None:
        write_csv(record.series, path)
        record.metadata['output'] = str(path)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
    with path.with_suffix(path.suffix + RECORD_SUFFIX).open('w', encoding='utf8') as stream:
        json.dump(record.as_dict(), stream, indent=2, default=float)
    return path if record.series is not None else None

def compare_series(first: TimeSeries, second: TimeSeries, channel: str,
                   other_channel: str=None) -> DeviationSummary:
    """Compares `channel` of `first` with `other_channel` (same name by default) of `second`.

    Raises:
        ModelError: When grids differ or a channel is missing.
    """
    other_channel = other_channel or channel
    if first.times.shape != second.times.shape or not np.array_equal(first.times, second.times):
        raise ModelError("Compared series have different grids")
    differences = first[channel] - second[other_channel]
    return DeviationSummary(channel, other_channel, float(np.abs(differences).max()),
                            float(np.abs(differences).mean()), differences)

def compare_runs(first: RunRecord, second: RunRecord, channel: str, other_channel: str=None) -> DeviationSummary:
    """Compares channels of two run records, see `compare_series`.

    Raises:
        ModelError: When a run has no series, grids differ or a channel is missing.
    """
    if first.series is None or second.series is None:
        raise ModelError("Compared runs must have sampled series")
    return compare_series(first.series, second.series, channel, other_channel)

def compare_csv(first: Union[str, Path], second: Union[str, Path], channel: str,
                other_channel: str=None) -> DeviationSummary:
    """Compares channels of two CSV files, see `compare_series`.
    """
    return compare_series(read_csv(first), read_csv(second), channel, other_channel)
