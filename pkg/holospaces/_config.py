"""Numerical defaults, overridable from the environment.

Every entry of `DEFAULTS` can be replaced by exporting
``HOLOSPACES_<NAME>`` (upper case), e.g. ``HOLOSPACES_TOL=1e-9``.
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('DEFAULTS', 'get', 'override')
__docformat__ = 'restructuredtext'

import logging
import os

from holospaces.exceptions import ConfigError

_logger = logging.getLogger('holospaces.config')

DEFAULTS = {
    # absolute-or-relative target of quadratures and series tails
    'tol': 1e-10,
    # inner integrals of nested weights run tighter than their consumers
    'inner_tol': 1e-13,
    'disc_refusal_radius': 0.98,
    'disc_certified_radius': 0.9,
    'disc_n_max': 128,
    'plane_n_max': 64,
    'halfplane_im_floor': 1e-2,
    'gauss_order': 16,
    'max_levels': 8,
    'grading_depth': 12,
    'singular_grading_depth': 90,
    'series_n_cap': 4096,
    'hardy_ladder_depth': 14,
    'workers': 4,
}

_overrides = {}


def get(name):
    """Return the effective value of the default `name`.

    :Parameters:
        `name` : str
            A key of `DEFAULTS`.
    :Raises ConfigError: if the environment holds a malformed override.
    """
    try:
        default = DEFAULTS[name]
    except KeyError:
        raise ConfigError('unknown setting %r' % name)
    if name in _overrides:
        return _overrides[name]
    raw = os.environ.get('HOLOSPACES_' + name.upper())
    if raw is None:
        return default
    try:
        value = type(default)(raw)
    except ValueError:
        raise ConfigError('HOLOSPACES_%s=%r is not a valid %s'
                          % (name.upper(), raw, type(default).__name__))
    _logger.debug('setting %s overridden from the environment: %r',
                  name, value)
    return value


def override(name, value):
    """Set `name` for the rest of the process (used by the CLI's
    ``--set``).

    :Raises ConfigError: for an unknown name or a malformed value.
    """
    if name not in DEFAULTS:
        raise ConfigError('unknown setting %r' % name)
    kind = type(DEFAULTS[name])
    try:
        _overrides[name] = kind(value)
    except ValueError:
        raise ConfigError('%s=%r is not a valid %s'
                          % (name, value, kind.__name__))
    _logger.debug('setting %s overridden: %r', name, _overrides[name])
