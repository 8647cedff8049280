# SPDX-FileCopyrightText: 2024-present The cavityspin developers
#
# SPDX-License-Identifier: MIT
__version__ = "0.1.0"
