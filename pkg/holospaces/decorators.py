"""Registration of verification scenario families."""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('scenario', 'registered', 'lookup')
__docformat__ = 'restructuredtext'

import inspect
import re
import threading

from holospaces.exceptions import ConfigError

_KIND = re.compile(r'^[a-z][a-z0-9]*(-[a-z0-9]+)*$')

_registry = {}
_registry_lock = threading.Lock()


def scenario(kind, claim_id, statement):
    """Factory for decorators marking a function as the runner of one
    scenario family of the verification harness.

    The decorated function is registered under `kind`, the value of the
    ``kind`` key of harness configurations. The harness calls it with the
    keyword arguments it declares, taken from the scenario entry:
    ``geometry``, ``weight``, ``functions``, ``p``, ``tol``, ``points`` and
    ``rng`` are always available, any other parameter is read from the
    scenario's options.

    :Parameters:
        `kind` : str
            Lower case, dash separated family name.
        `claim_id` : str
            Identifier of the verified claim; ``{geometry}`` is replaced by
            the geometry of the scenario.
        `statement` : str
            One line statement of the claim, formatted the same way.
    """
    if not _KIND.match(kind):
        raise ValueError('invalid scenario kind %r' % kind)

    def decorator(func):
        params = inspect.signature(func).parameters
        args = [name for name, param in params.items()
                if param.kind in (param.POSITIONAL_OR_KEYWORD,
                                  param.KEYWORD_ONLY)]
        if 'geometry' not in args:
            raise TypeError('scenario runner %s must take a geometry '
                            'argument' % func.__name__)
        required = [name for name in args
                    if params[name].default is inspect.Parameter.empty]

        func._holospaces_scenario_kind = kind
        func._holospaces_claim_id = claim_id
        func._holospaces_statement = statement
        func._holospaces_args = tuple(args)
        func._holospaces_required = tuple(required)
        with _registry_lock:
            if kind in _registry and _registry[kind] is not func:
                raise ValueError('scenario kind %r registered twice' % kind)
            _registry[kind] = func
        return func

    return decorator


def registered():
    """Return the registered kinds, sorted."""
    with _registry_lock:
        return sorted(_registry)


def lookup(kind):
    """Return the runner registered for `kind`.

    :Raises ConfigError: for an unknown kind.
    """
    with _registry_lock:
        try:
            return _registry[kind]
        except KeyError:
            raise ConfigError('unknown scenario kind %r (known: %s)'
                              % (kind, ', '.join(sorted(_registry))))
