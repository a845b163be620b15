# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

version = (0, 3, 0)
__version__ = '0.3.0'
