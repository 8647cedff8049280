# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           cli/commands.py
# DESCRIPTION:    Console commands
# CREATED:        21.03.2024
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

"""cavityspin - Console commands

Exit codes: 0 success, 1 validation failure, 2 numeric abort, 3 other error.
"""

from __future__ import annotations
from typing import Callable, List, Optional
import logging
from pathlib import Path
from functools import wraps
import typer
from rich.console import Console
from rich.table import Table
from cavityspin.base import (Error, CheckStatus, ValidationFailed, PropagationError, DimensionLimitError,
                             SingularRegimeError)
from cavityspin.model.api import ValidationReport
from cavityspin.cli.api import BUILTIN_RECIPES, RunRecord
from cavityspin.cli.service import (read_scenario, builtin_scenario, run_scenario, run_batch, write_record,
                                    compare_csv, ScenarioRunner)

EXIT_VALIDATION = 1
EXIT_NUMERIC = 2
EXIT_ERROR = 3

STATUS_STYLE = {CheckStatus.PASS: 'green', CheckStatus.WARN: 'yellow', CheckStatus.FAIL: 'bold red'}

console = Console()
app = typer.Typer(help="Coupled-cavity spin-1 chain simulator.", no_args_is_help=True,
                  pretty_exceptions_enable=False)

def print_report(report: ValidationReport) -> None:
    "Prints validation report as table."
    table = Table(title=f"Validation: {report.overall.name}")
    table.add_column('Check')
    table.add_column('Kind')
    table.add_column('Value', justify='right')
    table.add_column('Threshold', justify='right')
    table.add_column('Status')
    for check in report:
        style = STATUS_STYLE[check.status]
        table.add_row(check.name, check.kind, f"{check.value:.6g}", f"{check.threshold:.6g}",
                      f"[{style}]{check.status.name}[/{style}]")
    console.print(table)

def print_record(record: RunRecord) -> None:
    "Prints coefficients and channel summary of run."
    table = Table(title=f"Coefficients: {record.scenario.name}")
    table.add_column('Name')
    table.add_column('Value', justify='right')
    for name, value in record.coefficients.items():
        table.add_row(name, f"{value:.4f}")
    console.print(table)
    scan = record.metadata.get('trotter_scan')
    if scan is not None:
        console.print(f"Product-formula error slope: {scan['slope']:.4f}")
    if record.series is not None:
        console.print(f"{record.series.n_samples} samples, channels: {', '.join(record.series.names)}")
    if 'output' in record.metadata:
        console.print(f"Written: {record.metadata['output']}")

def guarded(func: Callable) -> Callable:
    "Maps library errors to exit codes."
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ValidationFailed as exc:
            print_report(exc.report)
            console.print(f"[bold red]ERROR:[/bold red] {exc}")
            raise typer.Exit(EXIT_VALIDATION) from exc
        except (PropagationError, DimensionLimitError, SingularRegimeError) as exc:
            console.print(f"[bold red]NUMERIC ABORT:[/bold red] {exc}")
            raise typer.Exit(EXIT_NUMERIC) from exc
        except Error as exc:
            console.print(f"[bold red]ERROR:[/bold red] {exc}")
            raise typer.Exit(EXIT_ERROR) from exc
    return wrapper

@app.callback()
def main(verbose: bool=typer.Option(False, '--verbose', '-v', help="Log debug messages.")):
    "Coupled-cavity spin-1 chain simulator."
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')

@app.command()
@guarded
def run(config: Path=typer.Argument(..., help="Scenario file.", exists=True, dir_okay=False),
        section: str=typer.Option('scenario', help="Scenario section."),
        override: bool=typer.Option(False, '--override', help="Run even when validation fails."),
        output_dir: Optional[Path]=typer.Option(None, '--output-dir', help="Directory for output files.")):
    "Runs scenario from file."
    record = run_scenario(read_scenario(config, section), override=override)
    write_record(record, output_dir)
    print_report(record.report)
    print_record(record)

@app.command()
@guarded
def builtin(name: Optional[str]=typer.Argument(None, help=f"One of: {', '.join(BUILTIN_RECIPES)}."),
            all_: bool=typer.Option(False, '--all', help="Run all built-in scenarios."),
            jobs: int=typer.Option(1, '--jobs', '-j', min=1, help="Scenarios run in parallel."),
            override: bool=typer.Option(False, '--override', help="Run even when validation fails."),
            output_dir: Optional[Path]=typer.Option(None, '--output-dir',
                                                    help="Directory for output files.")):
    "Runs built-in scenario(s)."
    if all_:
        names: List[str] = list(BUILTIN_RECIPES)
    elif name is not None:
        names = [name]
    else:
        raise Error("Specify scenario name or --all")
    records = run_batch([builtin_scenario(item) for item in names], jobs=jobs, override=override)
    for record in records:
        write_record(record, output_dir)
        print_report(record.report)
        print_record(record)

@app.command()
@guarded
def compare(csv1: Path=typer.Argument(..., exists=True, dir_okay=False),
            csv2: Path=typer.Argument(..., exists=True, dir_okay=False),
            channel: str=typer.Argument(..., help="Channel of first file."),
            other_channel: Optional[str]=typer.Option(None, '--other-channel',
                                                      help="Channel of second file, same by default.")):
    "Compares channels of two CSV files sampled on identical grids."
    summary = compare_csv(csv1, csv2, channel, other_channel)
    table = Table(title=f"{summary.channel} vs {summary.other_channel}")
    table.add_column('Max |diff|', justify='right')
    table.add_column('Mean |diff|', justify='right')
    table.add_row(f"{summary.max_abs:.6g}", f"{summary.mean_abs:.6g}")
    console.print(table)

@app.command()
@guarded
def validate(config: Path=typer.Argument(..., help="Scenario file.", exists=True, dir_okay=False),
             section: str=typer.Option('scenario', help="Scenario section.")):
    "Validates scenario parameters without running it."
    report = ScenarioRunner(read_scenario(config, section)).validate()
    print_report(report)
    if report.overall is CheckStatus.FAIL:
        raise typer.Exit(EXIT_VALIDATION)
