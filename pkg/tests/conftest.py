# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
#
# PROGRAM/MODULE: cavityspin
# FILE:           tests/conftest.py
# DESCRIPTION:    Shared test fixtures
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
import pytest
from cavityspin.base import Boundary
from cavityspin.model.api import FIG2_PARAMS, ModelParams, ZzParams, XyCoefficients
from cavityspin.model.service import compute_xy_coefficients
from cavityspin.hilbert.api import AtomicLevels, TruncationKind, HilbertSpace
from cavityspin.hilbert.service import build_space

@pytest.fixture
def fig2_params() -> ModelParams:
    return FIG2_PARAMS

@pytest.fixture
def fig2_coefficients(fig2_params) -> XyCoefficients:
    return compute_xy_coefficients(fig2_params)

@pytest.fixture
def zz_params() -> ZzParams:
    return ZzParams(g1=1.0, g4=1.0, om2=10.0, om3=-10.0, d1p=40.0, d3p=40.0, j_hop=0.5,
                    n_sites=2, boundary=Boundary.OPEN)

@pytest.fixture
def eliminated_space() -> HilbertSpace:
    return build_space(2, AtomicLevels.THREE, TruncationKind.TOTAL_CAP, 2)

@pytest.fixture
def full_space() -> HilbertSpace:
    return build_space(2, AtomicLevels.FIVE, TruncationKind.TOTAL_CAP, 2)
