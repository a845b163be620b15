"""Verification scenarios.

A scenario checks one claim about the spaces (an isometry, a projection
bound, a reconstruction formula, a kernel identity, the reproducing
property or the moment identities of Volterra squares) for one weight and a
set of test functions, and produces a `VerificationReport`. Scenario
families are registered with the `holospaces.decorators.scenario`
decorator; `run_all` runs a whole configuration in parallel and writes the
JSON and CSV summaries.

Configurations are JSON objects::

    {"seed": 1,
     "scenarios": [{"id": "isometry-disc", "kind": "isometry",
                    "geometry": "disc", "weight": "power:alpha=1",
                    "functions": {"random": 20, "degree": 8},
                    "tol": 1e-6}]}

Keys other than ``id``, ``kind``, ``geometry``, ``weight``, ``p``,
``functions``, ``tol``, ``points`` and ``expect_refusal`` are passed to
the runner of the family as keyword arguments.
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('VerificationScenario', 'VerificationReport', 'DEFAULT_CONFIG',
           'load_config', 'run_scenario', 'run_isometry_p2',
           'run_projection_bound', 'run_reconstruction',
           'run_kernel_identities', 'run_representation',
           'run_volterra_identities', 'run_all', 'write_reports')
__docformat__ = 'restructuredtext'

import csv
import json
import logging
import math
import numbers
import os
import time
import zlib
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from holospaces import _config, decorators, functions as fns
from holospaces._spec_parser import parse_function, parse_weight
from holospaces.exceptions import (ConfigError, DomainError,
                                   HoloSpacesException, OpenProblemError,
                                   PreconditionError)
from holospaces.moments import disc_moments, laplace_symbol, plane_moments
from holospaces.norms import area_norm, hardy_norm
from holospaces.operators import (OperatorContext, apply_L, area_reproduce,
                                  real_part_reproduce, reconstruct_boundary)
from holospaces.weights import (Geometry, SquashKind, WeightFunction,
                                derive_projection_weight, squash,
                                validate_class, volterra_square)

_logger = logging.getLogger('holospaces.harness')

_COMMON_KEYS = ('id', 'kind', 'geometry', 'weight', 'p', 'functions', 'tol',
                'points', 'expect_refusal')

PASS = 'pass'
FAIL = 'fail'
REFUSED = 'refused'
ERROR = 'error'


class VerificationScenario(object):
    """One entry of a harness configuration.

    :IVariables:
        `id` : str
        `kind` : str
            Registered scenario family.
        `geometry` : `Geometry`
        `weight` : str
            Weight grammar text.
        `p` : float
        `functions` : list of str, or dict
            Function grammar texts, or ``{"random": n, "degree": d}``.
        `tol` : float or None
            Pass threshold; None takes the family default.
        `points` : list of complex or None
        `expect_refusal` : bool
            The scenario passes iff the computation is refused as an open
            problem.
        `options` : dict
            Further keyword arguments of the family runner.
    """

    __slots__ = ('id', 'kind', 'geometry', 'weight', 'p', 'functions', 'tol',
                 'points', 'expect_refusal', 'options')

    def __init__(self, id, kind, geometry, weight, p=2.0, functions=None,
                 tol=None, points=None, expect_refusal=False, options=None):
        self.id = id
        self.kind = kind
        self.geometry = geometry
        self.weight = weight
        self.p = p
        self.functions = functions
        self.tol = tol
        self.points = points
        self.expect_refusal = expect_refusal
        self.options = dict(options or {})

    @classmethod
    def from_dict(cls, entry):
        """Validate one configuration entry.

        :Raises ConfigError: on a missing or malformed field.
        """
        if not isinstance(entry, dict):
            raise ConfigError('scenario entries are objects, got %r'
                              % (entry,))
        for key in ('id', 'kind', 'geometry', 'weight'):
            if key not in entry:
                raise ConfigError('scenario %r lacks %r'
                                  % (entry.get('id', '?'), key))
        sid = entry['id']
        if not isinstance(sid, str) or not sid:
            raise ConfigError('scenario ids are nonempty strings, got %r'
                              % (sid,))
        runner = decorators.lookup(entry['kind'])
        try:
            geometry = Geometry.coerce(entry['geometry'])
        except DomainError as e:
            raise ConfigError('%s: %s' % (sid, e.get_message()))
        if not isinstance(entry['weight'], str):
            raise ConfigError('%s: weight must be a grammar string' % sid)
        p = entry.get('p', 2.0)
        if not isinstance(p, numbers.Real) or isinstance(p, bool) or p < 1:
            raise ConfigError('%s: p must be a number >= 1' % sid)
        tol = entry.get('tol')
        if tol is not None and (not isinstance(tol, numbers.Real)
                                or not tol > 0):
            raise ConfigError('%s: tol must be positive' % sid)
        functions = entry.get('functions')
        if functions is not None:
            if isinstance(functions, dict):
                if set(functions) - set(('random', 'degree')) or \
                        not isinstance(functions.get('random'), int):
                    raise ConfigError('%s: random function sets are '
                                      '{"random": n[, "degree": d]}' % sid)
            elif not (isinstance(functions, list)
                      and all(isinstance(f, str) for f in functions)):
                raise ConfigError('%s: functions must be a list of function '
                                  'specs or {"random": n}' % sid)
        points = entry.get('points')
        if points is not None:
            points = [_point(sid, pt) for pt in points]
        options = dict((k, v) for k, v in entry.items()
                       if k not in _COMMON_KEYS)
        unknown = set(options) - (set(runner._holospaces_args)
                                  - set(('rng', 'geometry', 'weight')))
        if unknown:
            raise ConfigError('%s: unknown keys for kind %s: %s'
                              % (sid, entry['kind'],
                                 ', '.join(sorted(unknown))))
        return cls(sid, entry['kind'], geometry, entry['weight'], float(p),
                   functions, None if tol is None else float(tol), points,
                   bool(entry.get('expect_refusal', False)), options)

    def as_dict(self):
        out = {'id': self.id, 'kind': self.kind,
               'geometry': self.geometry.value, 'weight': self.weight,
               'p': self.p, 'functions': self.functions, 'tol': self.tol,
               'points': None if self.points is None
               else [[z.real, z.imag] for z in self.points],
               'expect_refusal': self.expect_refusal}
        out.update(self.options)
        return out


def _point(sid, pt):
    if isinstance(pt, (list, tuple)) and len(pt) == 2 and \
            all(isinstance(v, numbers.Real) for v in pt):
        return complex(pt[0], pt[1])
    if isinstance(pt, numbers.Real):
        return complex(pt)
    raise ConfigError('%s: points are [re, im] pairs, got %r' % (sid, pt))


class VerificationReport(object):
    """Outcome of one scenario.

    `verdict` is ``pass`` iff every thresholded quantity is finite and at
    most its threshold, ``fail`` otherwise; ``refused`` and ``error`` mark
    scenarios that raised.
    """

    __slots__ = ('scenario_id', 'kind', 'geometry', 'measured', 'thresholds',
                 'info', 'references', 'error', 'refused', 'wall_time')

    def __init__(self, scenario_id, kind, geometry, measured=None,
                 thresholds=None, info=None, references=None, error=None,
                 refused=False, wall_time=None):
        self.scenario_id = scenario_id
        self.kind = kind
        self.geometry = geometry
        self.measured = dict(measured or {})
        self.thresholds = dict(thresholds or {})
        self.info = dict(info or {})
        self.references = dict(references or {})
        self.error = error
        self.refused = refused
        self.wall_time = wall_time

    @property
    def verdict(self):
        if self.refused:
            return REFUSED
        if self.error is not None:
            return ERROR
        for name, limit in self.thresholds.items():
            value = self.measured.get(name)
            if value is None or not math.isfinite(value) or value > limit:
                return FAIL
        return PASS

    @property
    def passed(self):
        return self.verdict == PASS

    def as_dict(self, timing=False):
        out = {'id': self.scenario_id, 'kind': self.kind,
               'geometry': self.geometry.value, 'verdict': self.verdict,
               'measured': self.measured, 'thresholds': self.thresholds,
               'info': self.info, 'references': self.references,
               'error': self.error}
        if timing:
            out['wall_time'] = self.wall_time
        return out

    def __repr__(self):
        return '<VerificationReport %s: %s>' % (self.scenario_id,
                                                self.verdict)


# -- helpers ------------------------------------------------------------

def _weight(geometry, weight):
    if isinstance(weight, WeightFunction):
        if weight.geometry is not geometry:
            raise DomainError('weight %s lives on the %s, scenario on the %s'
                              % (weight.spec(), weight.geometry.value,
                                 geometry.value))
        return weight
    return parse_weight(weight, geometry)


def _functions(geometry, functions, rng, default_count=3, degree=8):
    if functions is None:
        functions = {'random': default_count}
    if isinstance(functions, dict):
        count = functions['random']
        degree = functions.get('degree', degree)
        if rng is None:
            rng = np.random.default_rng(0)
        if geometry is Geometry.HALFPLANE:
            return [fns.random_rational(rng) for _ in range(count)]
        return [fns.random_polynomial(rng, degree) for _ in range(count)]
    out = []
    for f in functions:
        f = parse_function(f) if isinstance(f, str) else f
        if (geometry is Geometry.HALFPLANE) != \
                (getattr(f, 'geometry', None) is Geometry.HALFPLANE):
            raise DomainError('%s is not a %s test function'
                              % (f.spec(), geometry.value))
        out.append(f)
    return out


def _points(geometry, points, rng, count):
    if points is not None:
        return np.asarray(points, dtype=complex)
    if rng is None:
        rng = np.random.default_rng(0)
    if geometry is Geometry.HALFPLANE:
        return (rng.uniform(-2.0, 2.0, count)
                + 1j * rng.uniform(0.5, 2.5, count))
    radius = 0.8 if geometry is Geometry.DISC else 1.5
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, count))
    return r * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, count))


def _validated(*weights):
    for w in weights:
        report = validate_class(w)
        if not report.passed:
            raise PreconditionError('%s fails its class: %s' % (
                w.spec(), '; '.join('%s (%s)' % (c.condition, c.evidence)
                                    for c in report.failed())))


def _references(func, geometry):
    return {'claim': func._holospaces_claim_id.format(
                geometry=geometry.value),
            'statement': func._holospaces_statement.format(
                geometry=geometry.value)}


def _report(func, geometry, measured, thresholds, info=None):
    return VerificationReport(None, func._holospaces_scenario_kind, geometry,
                              measured, thresholds, info,
                              _references(func, geometry))


def _max(values):
    return float(max(values)) if values else 0.0


def _relative(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return float(np.max(np.abs(a - b) / np.maximum(np.abs(b), 1e-300)))


# -- scenario families --------------------------------------------------

@decorators.scenario(
    'isometry', 'p2-isometry-{geometry}',
    'on the {geometry}, L_omega is an isometry from A^2 of the Volterra '
    'square of omega onto its image in H^2')
def run_isometry_p2(geometry, weight, functions=None, tol=None, rng=None,
                    degree=8):
    """Compare ``||L f||_{H^2}`` with ``||f||_{2, square}`` for every f."""
    geometry = Geometry.coerce(geometry)
    tol = 1e-6 if tol is None else tol
    base = _weight(geometry, weight)
    square = volterra_square(base)
    _validated(base, square)
    ctx = OperatorContext(base)
    hardy_geometry = Geometry.HALFPLANE if geometry is Geometry.HALFPLANE \
        else Geometry.DISC
    gaps = []
    worst = None
    for f in _functions(geometry, functions, rng, 20, degree):
        lhs = hardy_norm(hardy_geometry, 2, apply_L(ctx, f)).value
        rhs = area_norm(square, 2, f).value
        gap = abs(lhs - rhs) / rhs if rhs > 0 else abs(lhs)
        _logger.debug('isometry %s: %.15g vs %.15g', f.spec(), lhs, rhs)
        if worst is None or gap > max(gaps):
            worst = f.spec()
        gaps.append(gap)
    return _report(run_isometry_p2, geometry,
                   {'max_discrepancy': _max(gaps)},
                   {'max_discrepancy': tol},
                   {'functions': len(gaps), 'worst_function': worst,
                    'square': square.spec()})


def _projection_pairs(geometry, weight, p, variant):
    """Return (omega_1, omega, Delta_0)."""
    w = _weight(geometry, weight)
    if geometry is not Geometry.HALFPLANE:
        if geometry is Geometry.PLANE:
            var = w.normalization['variation']
            if abs(var - 1.0) > 1e-10:
                raise PreconditionError('the plane projection bound needs '
                                        'total variation 1, got %.12g' % var)
        return squash(w, SquashKind.SQUARE_ARG), w, 1.0
    if variant == 'double':
        if p != 1:
            raise PreconditionError('the 2t substitution bound is stated '
                                    'for p = 1')
        return squash(w, SquashKind.DOUBLE_ARG), w, 1.0
    if variant != 'derived':
        raise DomainError('unknown projection variant %r' % (variant,))
    derived = derive_projection_weight(w, p)
    if not derived.extras.get('base_derivative_nondecreasing', True):
        raise PreconditionError("omega_1' must be nondecreasing on "
                                '[0, Delta]')
    delta0 = w.end_value - w.evaluate(0.0)
    return w, derived, delta0


@decorators.scenario(
    'projection', 'projection-bound-{geometry}',
    'on the {geometry}, ||L_omega1 f||_{{H^p}} is bounded by ||f||_{{p,omega}} '
    '(times Delta_0**((p-1)/p) for the derived half-plane weight)')
def run_projection_bound(geometry, weight, functions=None, p=2.0, tol=None,
                         rng=None, variant='derived', degree=8):
    """Return the largest bound ratio over the function set.

    Disc and plane: omega is `weight` and omega_1(x) = omega(x**2).
    Half-plane, variant ``derived``: omega_1 is `weight`, omega is the
    derived weight and the ratio is taken in the p-th power form
    ``||L f||**p / (Delta_0**(p-1) ||f||**p)``; the ratio of the norms
    against ``Delta_0**(p-1)`` is reported alongside. Variant ``double``
    (p = 1): omega is `weight` and omega_1(t) = omega(2t).
    """
    geometry = Geometry.coerce(geometry)
    p = float(p)
    tol = 1e-8 if tol is None else tol
    w1, w, delta0 = _projection_pairs(geometry, weight, p, variant)
    _validated(w1, w)
    ctx = OperatorContext(w1)
    hardy_geometry = Geometry.HALFPLANE if geometry is Geometry.HALFPLANE \
        else Geometry.DISC
    chain = geometry is Geometry.HALFPLANE and variant == 'derived'
    ratios = []
    stated = []
    for f in _functions(geometry, functions, rng, 20, degree):
        lhs = hardy_norm(hardy_geometry, p, apply_L(ctx, f)).value
        rhs = area_norm(w, p, f).value
        if rhs == 0:
            ratios.append(0.0 if lhs == 0 else math.inf)
            stated.append(ratios[-1])
            continue
        if chain:
            ratios.append(lhs ** p / (delta0 ** (p - 1.0) * rhs ** p))
            stated.append(lhs / (delta0 ** (p - 1.0) * rhs))
        else:
            ratios.append(lhs / rhs)
            stated.append(lhs / rhs)
    info = {'omega': w.spec(), 'omega_1': w1.spec(),
            'functions': len(ratios)}
    if chain:
        info['delta0'] = delta0
        info['max_ratio_norm_form'] = _max(stated)
    return _report(run_projection_bound, geometry,
                   {'max_ratio': _max(ratios)}, {'max_ratio': 1.0 + tol},
                   info)


def _orthogonal_boundary(phi):
    """Add a mode orthogonal to H^2 of the disc to the boundary data."""
    def shifted(e):
        e = np.asarray(e, dtype=complex)
        return fns.evaluate(phi, e) + 0.3 * np.conj(e) - 0.1j * np.conj(e) ** 2

    return shifted


@decorators.scenario(
    'reconstruction', 'boundary-reconstruction-{geometry}',
    'on the {geometry}, f is recovered from the boundary values of '
    'L_omega1 f through the kernel of omega1')
def run_reconstruction(geometry, weight, functions=None, points=None,
                       tol=None, rng=None, degree=4):
    """Return the largest reconstruction error over functions and points.

    Disc and plane also report how far adding modes orthogonal to H^2 moves
    the reconstruction.
    """
    geometry = Geometry.coerce(geometry)
    tol = {Geometry.DISC: 1e-7, Geometry.PLANE: 1e-6,
           Geometry.HALFPLANE: 1e-4}[geometry] if tol is None else tol
    w1 = _weight(geometry, weight)
    _validated(w1)
    inner_tol = _config.get('tol') if geometry is not Geometry.HALFPLANE \
        else tol * 1e-2
    ctx = OperatorContext(w1, tol=inner_tol)
    zs = _points(geometry, points, rng, 5)
    errors = []
    shifts = []
    for f in _functions(geometry, functions, rng, 2, degree):
        phi = apply_L(ctx, f)
        got = np.atleast_1d(reconstruct_boundary(ctx, phi, zs))
        want = np.atleast_1d(fns.evaluate(f, zs))
        errors.append(float(np.max(np.abs(got - want))))
        if geometry is not Geometry.HALFPLANE:
            other = np.atleast_1d(reconstruct_boundary(
                ctx, _orthogonal_boundary(phi), zs))
            shifts.append(float(np.max(np.abs(other - got))))
    measured = {'max_error': _max(errors)}
    thresholds = {'max_error': tol}
    if shifts:
        measured['orthogonal_shift'] = _max(shifts)
        thresholds['orthogonal_shift'] = tol
    return _report(run_reconstruction, geometry, measured, thresholds,
                   {'points': len(zs), 'functions': len(errors)})


@decorators.scenario(
    'kernel-identity', 'kernel-identity-{geometry}',
    'on the {geometry}, L_omega applied to the kernel of omega gives '
    '1/(1 - z) (disc) or -1/(i z) (half-plane)')
def run_kernel_identities(geometry, weight, points=None, tol=None, rng=None,
                          count=20):
    """Return the largest error of the kernel identity over the points
    (z = 0 is always included on the disc)."""
    geometry = Geometry.coerce(geometry)
    if geometry is Geometry.PLANE:
        raise DomainError('the kernel identity is checked on the disc and '
                          'the half-plane')
    w = _weight(geometry, weight)
    _validated(w)
    k = OperatorContext(w).kernel
    zs = _points(geometry, points, rng, count)
    if geometry is Geometry.DISC:
        if points is None:
            zs[0] = 0.0
        tol = 1e-7 if tol is None else tol

        def integrand(t):
            return k.evaluate(t[:, None] * zs[None, :])

        value, _ = w.stieltjes(integrand, rtol=1e-10, atol=1e-12,
                               what='L applied to the kernel')
        got = -np.asarray(value)
        want = 1.0 / (1.0 - zs)
    else:
        tol = 1e-6 if tol is None else tol

        def integrand(t):
            return k.evaluate(zs[None, :] + 1j * t[:, None])

        value, _ = w.stieltjes(integrand, rtol=1e-9, atol=1e-11,
                               what='L applied to the kernel')
        got = np.asarray(value)
        want = 1j / zs
    err = float(np.max(np.abs(got - want)))
    return _report(run_kernel_identities, geometry, {'max_error': err},
                   {'max_error': tol},
                   {'points': len(zs), 'kernel': k.mode.value})


@decorators.scenario(
    'representation', 'area-representation-{geometry}',
    'on the {geometry}, integrating f against the kernel of omega over the '
    'area measure of omega reproduces f and annihilates conjugate '
    'monomials')
def run_representation(geometry, weight, functions=None, points=None,
                       p=2.0, tol=None, rng=None, degree=8,
                       antiholomorphic=True, real_part=True):
    geometry = Geometry.coerce(geometry)
    if tol is None:
        tol = 1e-4 if geometry is Geometry.HALFPLANE else 1e-7
    w = _weight(geometry, weight)
    _validated(w)
    ctx = OperatorContext(w, p=p)
    zs = _points(geometry, points, rng, 10 if geometry is not
                 Geometry.HALFPLANE else 5)
    errors = []
    measured = {}
    thresholds = {}
    fset = _functions(geometry, functions, rng, 3, degree)
    for f in fset:
        got = np.atleast_1d(area_reproduce(ctx, f, zs))
        errors.append(float(np.max(np.abs(got - fns.evaluate(f, zs)))))
    measured['max_error'] = _max(errors)
    thresholds['max_error'] = tol
    if geometry is not Geometry.HALFPLANE:
        if antiholomorphic:
            worst = 0.0
            for m in (1, 2, 3):
                got = area_reproduce(ctx, lambda zeta, m=m: np.conj(zeta) ** m,
                                     zs)
                worst = max(worst, float(np.max(np.abs(got))))
            measured['max_annihilation'] = worst
            thresholds['max_annihilation'] = 1e-8
        if real_part and fset:
            f = fset[0]
            got = np.atleast_1d(real_part_reproduce(ctx, f, zs))
            measured['real_part_error'] = float(np.max(np.abs(
                got - fns.evaluate(f, zs))))
            thresholds['real_part_error'] = tol
    return _report(run_representation, geometry, measured, thresholds,
                   {'points': len(zs), 'functions': len(fset), 'p': p})


@decorators.scenario(
    'volterra-moments', 'volterra-square-moments-{geometry}',
    'on the {geometry}, the moments (Laplace symbol) of the Volterra square '
    'are the squares of those of the base weight')
def run_volterra_identities(geometry, weight, tol=None, n_max=None,
                            samples=16):
    geometry = Geometry.coerce(geometry)
    tol = 1e-8 if tol is None else tol
    w = _weight(geometry, weight)
    _validated(w)
    square = volterra_square(w)
    if geometry is Geometry.HALFPLANE:
        ts = w.growth + np.logspace(-1.0, 1.0, samples)
        base = laplace_symbol(w).evaluate(ts)
        got = laplace_symbol(square).evaluate(ts)
        info = {'samples': samples}
    else:
        if n_max is None:
            n_max = 32 if geometry is Geometry.DISC else 16
        moments = disc_moments if geometry is Geometry.DISC \
            else plane_moments
        base = moments(w, n_max).values
        got = moments(square, n_max).values
        info = {'n_max': n_max}
    info['square'] = square.spec()
    return _report(run_volterra_identities, geometry,
                   {'max_rel_error': _relative(got, base * base)},
                   {'max_rel_error': tol}, info)


# -- running ------------------------------------------------------------

DEFAULT_CONFIG = {
    'seed': 20260101,
    'scenarios': [
        {'id': 'isometry-disc', 'kind': 'isometry', 'geometry': 'disc',
         'weight': 'power:alpha=1', 'functions': {'random': 20, 'degree': 8},
         'tol': 1e-6},
        {'id': 'isometry-plane', 'kind': 'isometry', 'geometry': 'plane',
         'weight': 'exp-simple', 'functions': {'random': 20, 'degree': 6},
         'tol': 1e-6},
        {'id': 'isometry-halfplane', 'kind': 'isometry',
         'geometry': 'halfplane', 'weight': 'linear',
         'functions': {'random': 20}, 'tol': 1e-6},
        {'id': 'projection-disc', 'kind': 'projection', 'geometry': 'disc',
         'weight': 'power:alpha=1', 'p': 2,
         'functions': {'random': 20, 'degree': 8}, 'tol': 1e-8},
        {'id': 'projection-plane', 'kind': 'projection', 'geometry': 'plane',
         'weight': 'exp-simple', 'p': 2,
         'functions': {'random': 20, 'degree': 6}, 'tol': 1e-8},
        {'id': 'projection-halfplane-linear', 'kind': 'projection',
         'geometry': 'halfplane', 'weight': 'linear:cap=1', 'p': 2,
         'functions': ['rational:[(1, 1, 2)]', 'rational:[(0.5, 0.5, 3)]'],
         'tol': 1e-6},
        {'id': 'projection-halfplane-square', 'kind': 'projection',
         'geometry': 'halfplane', 'weight': 'power:alpha=1,cap=1', 'p': 2,
         'functions': ['rational:[(1, 1, 2)]'], 'tol': 1e-6},
        {'id': 'projection-halfplane-p1', 'kind': 'projection',
         'geometry': 'halfplane', 'weight': 'linear:slope=0.5,cap=2', 'p': 1,
         'variant': 'double', 'functions': ['rational:[(1, 1, 2)]'],
         'tol': 1e-6},
        {'id': 'reconstruction-disc', 'kind': 'reconstruction',
         'geometry': 'disc', 'weight': 'power:alpha=1',
         'functions': ['taylor:[0, 2, 0, 1]'],
         'points': [[0.3, 0.0], [0.0, 0.5], [-0.2, 0.4]], 'tol': 1e-7},
        {'id': 'reconstruction-plane', 'kind': 'reconstruction',
         'geometry': 'plane', 'weight': 'squash2(exp-simple)',
         'functions': ['taylor:[0, 0, 1]'], 'points': [[1.0, 1.0]],
         'tol': 1e-6},
        {'id': 'reconstruction-halfplane', 'kind': 'reconstruction',
         'geometry': 'halfplane', 'weight': 'linear:cap=1',
         'functions': {'random': 1},
         'points': [[0.0, 1.0], [0.5, 0.5], [-1.0, 2.0], [2.0, 1.0],
                    [0.0, 0.3]], 'tol': 1e-4},
        {'id': 'reconstruction-halfplane-fixed', 'kind': 'reconstruction',
         'geometry': 'halfplane', 'weight': 'linear:cap=1',
         'functions': ['rational:[(1, 1, 2)]'], 'points': [[0.0, 1.0]],
         'tol': 1e-4},
        {'id': 'kernel-identity-disc', 'kind': 'kernel-identity',
         'geometry': 'disc', 'weight': 'power:alpha=2', 'tol': 1e-7},
        {'id': 'kernel-identity-halfplane', 'kind': 'kernel-identity',
         'geometry': 'halfplane', 'weight': 'linear', 'tol': 1e-6},
        {'id': 'representation-disc', 'kind': 'representation',
         'geometry': 'disc', 'weight': 'power:alpha=1',
         'functions': {'random': 3, 'degree': 8}, 'tol': 1e-7},
        {'id': 'representation-plane', 'kind': 'representation',
         'geometry': 'plane', 'weight': 'exp-simple', 'p': 2,
         'functions': ['taylor:[1, 0, 0.5]'], 'points': [[0.5, 0.5]],
         'tol': 1e-7},
        {'id': 'representation-plane-p1', 'kind': 'representation',
         'geometry': 'plane', 'weight': 'exp-simple', 'p': 1,
         'functions': ['taylor:[1, 0, 0.5]'], 'points': [[0.5, 0.5]],
         'expect_refusal': True},
        {'id': 'representation-halfplane', 'kind': 'representation',
         'geometry': 'halfplane', 'weight': 'linear',
         'functions': ['rational:[(1, 1, 2)]'], 'tol': 1e-4},
        {'id': 'volterra-moments-disc', 'kind': 'volterra-moments',
         'geometry': 'disc', 'weight': 'power:alpha=1', 'tol': 1e-8},
        {'id': 'volterra-moments-plane', 'kind': 'volterra-moments',
         'geometry': 'plane', 'weight': 'exp-simple', 'tol': 1e-8},
        {'id': 'volterra-moments-halfplane', 'kind': 'volterra-moments',
         'geometry': 'halfplane', 'weight': 'linear:cap=1', 'tol': 1e-8},
    ],
}


def load_config(config):
    """Return (seed, scenarios) from a configuration dict, a JSON string
    or a path to a JSON file.

    :Raises ConfigError: if the configuration is malformed or two
        scenarios share an id.
    """
    if isinstance(config, str):
        if os.path.exists(config):
            try:
                with open(config) as f:
                    config = json.load(f)
            except (OSError, ValueError) as e:
                raise ConfigError('cannot read %s: %s' % (config, e))
        else:
            try:
                config = json.loads(config)
            except ValueError as e:
                raise ConfigError('not a file and not JSON: %s' % e)
    if not isinstance(config, dict):
        raise ConfigError('the configuration must be a JSON object')
    unknown = set(config) - set(('seed', 'scenarios'))
    if unknown:
        raise ConfigError('unknown top-level keys: %s'
                          % ', '.join(sorted(unknown)))
    seed = config.get('seed', 0)
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise ConfigError('seed must be a nonnegative integer')
    entries = config.get('scenarios', [])
    if not isinstance(entries, list):
        raise ConfigError('scenarios must be a list')
    scenarios = [VerificationScenario.from_dict(e) for e in entries]
    seen = set()
    for s in scenarios:
        if s.id in seen:
            raise ConfigError('duplicate scenario id %r' % s.id)
        seen.add(s.id)
    return seed, scenarios


def _rng(seed, sid):
    return np.random.default_rng(seed + zlib.crc32(sid.encode('utf-8')))


def run_scenario(scenario, seed=0):
    """Run one `VerificationScenario` and return its report.

    Exceptions never escape: refusals of open problems become ``refused``
    reports (or passes when the scenario expects them) and other errors
    become ``error`` reports.
    """
    runner = decorators.lookup(scenario.kind)
    args = runner._holospaces_args
    available = {'geometry': scenario.geometry, 'weight': scenario.weight,
                 'functions': scenario.functions, 'p': scenario.p,
                 'tol': scenario.tol, 'points': scenario.points,
                 'rng': _rng(seed, scenario.id)}
    kwargs = dict((k, v) for k, v in available.items() if k in args)
    kwargs.update(scenario.options)
    references = _references(runner, scenario.geometry)
    _logger.info('scenario %s (%s on the %s) started', scenario.id,
                 scenario.kind, scenario.geometry.value)
    start = time.perf_counter()
    try:
        report = runner(**kwargs)
        if scenario.expect_refusal:
            report.error = 'expected a refusal, the scenario ran'
    except OpenProblemError as e:
        report = VerificationReport(None, scenario.kind, scenario.geometry,
                                    references=references,
                                    refused=not scenario.expect_refusal,
                                    info={'refusal': e.get_message()})
        _logger.info('scenario %s refused: %s', scenario.id, e)
    except HoloSpacesException as e:
        _logger.error('scenario %s failed: %s', scenario.id, e,
                      exc_info=e.include_traceback)
        report = VerificationReport(None, scenario.kind, scenario.geometry,
                                    references=references,
                                    error='%s: %s' % (e.get_error_name(),
                                                      e.get_message()))
    except Exception as e:
        _logger.error('scenario %s crashed', scenario.id, exc_info=True)
        report = VerificationReport(None, scenario.kind, scenario.geometry,
                                    references=references,
                                    error='%s: %s' % (type(e).__name__, e))
    report.scenario_id = scenario.id
    report.wall_time = time.perf_counter() - start
    _logger.info('scenario %s finished: %s (%.2f s)', scenario.id,
                 report.verdict, report.wall_time)
    return report


def run_all(config=None, seed=None, only=None, out_dir=None, workers=None):
    """Run every scenario of `config` (the default configuration when
    None) in parallel.

    :Parameters:
        `seed` : int or None
            Overrides the configuration seed.
        `only` : sequence of str or None
            Restrict the run to these scenario ids.
        `out_dir` : str or None
            Where to write the reports (see `write_reports`).
    :Returns: (reports, exit status): 0 when every scenario passed, 1
        otherwise, 2 for configuration errors (with no reports).
    """
    try:
        cfg_seed, scenarios = load_config(DEFAULT_CONFIG if config is None
                                          else config)
        if only:
            known = set(s.id for s in scenarios)
            missing = set(only) - known
            if missing:
                raise ConfigError('no such scenario: %s'
                                  % ', '.join(sorted(missing)))
            scenarios = [s for s in scenarios if s.id in set(only)]
    except ConfigError as e:
        _logger.error('%s', e)
        return [], 2
    if seed is None:
        seed = cfg_seed
    if workers is None:
        workers = _config.get('workers')
    if scenarios:
        with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            reports = list(pool.map(lambda s: run_scenario(s, seed),
                                    scenarios))
    else:
        reports = []
    if out_dir is not None:
        write_reports(reports, out_dir, seed)
    status = 0 if all(r.passed for r in reports) else 1
    _logger.info('%d scenarios, %d passed', len(reports),
                 sum(1 for r in reports if r.passed))
    return reports, status


def _jsonable(value):
    if isinstance(value, dict):
        return dict((k, _jsonable(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return value


def write_reports(reports, out_dir, seed=None):
    """Write ``report.json`` (no timings, so reruns compare equal),
    ``summary.csv`` (one row per measured quantity) and ``timings.csv``
    into `out_dir`."""
    os.makedirs(out_dir, exist_ok=True)
    doc = {'seed': seed, 'scenarios': [r.as_dict() for r in reports],
           'passed': all(r.passed for r in reports)}
    with open(os.path.join(out_dir, 'report.json'), 'w') as f:
        json.dump(_jsonable(doc), f, indent=2, sort_keys=True)
        f.write('\n')
    with open(os.path.join(out_dir, 'summary.csv'), 'w', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(['id', 'kind', 'geometry', 'verdict', 'quantity',
                         'value', 'threshold', 'claim'])
        for r in reports:
            rows = sorted(r.measured.items()) or [('', '')]
            for name, value in rows:
                writer.writerow([r.scenario_id, r.kind, r.geometry.value,
                                 r.verdict, name,
                                 '' if value == '' else repr(value),
                                 repr(r.thresholds[name])
                                 if name in r.thresholds else '',
                                 r.references.get('claim', '')])
    with open(os.path.join(out_dir, 'timings.csv'), 'w', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(['id', 'wall_time'])
        for r in reports:
            writer.writerow([r.scenario_id, '%.3f' % (r.wall_time or 0.0)])
    _logger.info('reports written to %s', out_dir)
