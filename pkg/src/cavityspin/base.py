# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           base.py
# DESCRIPTION:    Shared errors and enumerations
# CREATED:        12.03.2024
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

"""cavityspin - Shared errors and enumerations

All frequencies, couplings and detunings used by the package are dimensionless numbers in
units of the first cavity coupling g₁; times are in units of 1/g₁.
"""

from __future__ import annotations
from enum import Enum
from firebird.base.types import Error

# Enums

class Boundary(Enum):
    """Chain boundary condition.
    """
    OPEN = 'open'
    PERIODIC = 'periodic'

class CheckStatus(Enum):
    """Outcome of single validation check, ordered by severity.
    """
    PASS = 0
    WARN = 1
    FAIL = 2
    @property
    def severity(self) -> int:
        "Numeric severity (higher is worse)."
        return self.value

# Exceptions

class ModelError(Error):
    """Structural error in model parameters, labels or spaces.
    """

class SingularRegimeError(Error):
    """Effective coefficients are undefined for given parameters (zero resolvent denominator).
    """

class DimensionLimitError(Error):
    """Requested Hilbert space exceeds the configured dimension cap.

    The computed size is available as `dimension` attribute.
    """

class PropagationError(Error):
    """Numeric propagation aborted (step underflow or substep limit).
    """

class ValidationFailed(Error):
    """Parameter validation failed and the run was refused.

    The gating report is available as `report` attribute.
    """
