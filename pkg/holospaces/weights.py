"""Weight functions on the unit disc, the complex plane and the upper
half-plane.

A `WeightFunction` bundles the values and (when available) the derivative
of a monotone weight together with what the integrators need to know about
it: break points, end point singularities, the natural length scale and the
atoms of its Stieltjes measure. Weights are immutable once built and may be
evaluated from any number of threads.

Stieltjes convention: on the half-plane the measure ``d omega`` on
[0, +inf) carries an atom ``omega(0)`` at the origin (``omega(0-) = 0``).
The same atom enters the Laplace symbol, the operator ``L`` and the area
measure.
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('Geometry', 'NamedWeight', 'SquashKind', 'Verdict', 'Family',
           'WeightFunction', 'ClassCondition', 'WeightClassReport',
           'make_power_weight', 'make_linear_weight', 'make_named_weight',
           'volterra_square', 'derive_projection_weight',
           'projection_constant', 'squash', 'validate_class',
           'load_tabulated', 'power_data', 'decay_data')
__docformat__ = 'restructuredtext'

import collections
import csv
import enum
import logging
import math
import threading

import numpy as np
from scipy.special import gammaincc, gammaln

from holospaces import _config
from holospaces.exceptions import (AccuracyError, ClassViolationError,
                                   DomainError, PreconditionError)
from holospaces.quadrature import (integrate, integrate_halfline,
                                   integrate_rows, row_edges)

_logger = logging.getLogger('holospaces.weights')

_MEMO_ENTRIES = 32
_MEMO_MAX_SIZE = 1 << 20
# slack allowed when a mapped node lands a rounding error outside [0, 1]
_EDGE_SLACK = 1e-12


class Geometry(enum.Enum):
    DISC = 'disc'
    PLANE = 'plane'
    HALFPLANE = 'halfplane'

    @classmethod
    def coerce(cls, value):
        """Accept a `Geometry` or its (case-insensitive) name."""
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace('-', '').replace('_', '')
        for member in cls:
            if member.value == key:
                return member
        raise DomainError('unknown geometry %r (expected disc, plane or '
                          'halfplane)' % (value,))


class NamedWeight(enum.Enum):
    EXP_SIMPLE = 'exp-simple'
    EXP_DECAY = 'exp-decay'
    EXP_GROWTH_MINUS_ONE = 'exp-minus-one'
    LOG_ONE_PLUS = 'log-one-plus'

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace('_', '-')
        aliases = {'expsimple': 'exp-simple', 'expdecay': 'exp-decay',
                   'expgrowthminusone': 'exp-minus-one',
                   'logoneplus': 'log-one-plus'}
        key = aliases.get(key.replace('-', ''), key)
        for member in cls:
            if member.value == key:
                return member
        raise DomainError('unknown weight tag %r' % (value,))


class SquashKind(enum.Enum):
    SQUARE_ARG = 'square'
    DOUBLE_ARG = 'double'


class Verdict(enum.Enum):
    PASS = 'pass'
    FAIL = 'fail'
    INCONCLUSIVE = 'inconclusive'


def _fmt(value):
    if isinstance(value, float):
        return '%.15g' % value
    return str(value)


class Family(object):
    """Family tag of a weight: a name, its grammar parameters and, for
    derived constructions, the weights it was built from."""

    __slots__ = ('name', 'params', 'bases')

    def __init__(self, name, params=None, bases=()):
        self.name = name
        self.params = tuple((params or {}).items())
        self.bases = tuple(bases)

    def get(self, key, default=None):
        for k, v in self.params:
            if k == key:
                return v
        return default

    def spec(self):
        """Return the weight grammar text that rebuilds this family."""
        if self.name in ('volterra', 'squash2', 'squashx2'):
            return '%s(%s)' % (self.name, self.bases[0].spec())
        if self.name == 'derived':
            args = ['%s=%s' % (k, _fmt(v)) for k, v in self.params
                    if v is not None]
            args.append('base=' + self.bases[0].spec())
            return 'derived(%s)' % ','.join(args)
        if self.params:
            return '%s:%s' % (self.name, ','.join('%s=%s' % (k, _fmt(v))
                                                  for k, v in self.params))
        return self.name

    def __repr__(self):
        return '<Family %s>' % self.spec()


class WeightFunction(object):
    """A weight on one of the three geometries.

    :IVariables:
        `geometry` : `Geometry`
        `family` : `Family`
        `support_end` : float
            Smallest T with the weight constant on [T, +inf); +inf if none.
            Always 1 on the disc.
        `breakpoints` : tuple of float
            Kinks and jumps inside the domain.
        `singular` : tuple of float
            Points next to which the derivative may be unbounded.
        `scale` : float
            Length over which the weight varies appreciably; used by the
            half-line maps.
        `class_alpha` : float or None
            Exponent of the half-plane class the weight is declared in.
        `growth` : float
            Exponential growth rate of the weight at infinity (half-plane).
        `atoms` : tuple of (position, mass)
            Point masses of the Stieltjes measure.
        `end_value` : float
            omega(1) on the disc, the limit at +inf elsewhere.
        `extras` : dict
            Closed form data (``power``, ``exp_decay``, ``C0``, ``M``...).
    """

    __slots__ = ('geometry', 'family', '_value', '_derivative',
                 'support_end', 'breakpoints', 'singular', 'scale',
                 'class_alpha', 'growth', 'atoms', 'end_value', 'extras',
                 '_memoize', '_memo', '_lock')

    def __init__(self, geometry, family, value, derivative=None,
                 support_end=math.inf, breakpoints=(), singular=(),
                 scale=1.0, class_alpha=None, growth=0.0, atoms=(),
                 end_value=None, extras=None, memoize=False):
        self.geometry = Geometry.coerce(geometry)
        self.family = family
        self._value = value
        self._derivative = derivative
        if self.geometry is Geometry.DISC:
            support_end = 1.0
        self.support_end = float(support_end)
        self.breakpoints = tuple(sorted(float(b) for b in breakpoints))
        self.singular = tuple(sorted(float(s) for s in singular))
        self.scale = float(scale)
        self.class_alpha = class_alpha
        self.growth = float(growth)
        self.atoms = tuple((float(p), float(m)) for p, m in atoms if m != 0)
        self.extras = dict(extras or {})
        self._memoize = memoize
        self._memo = collections.OrderedDict()
        self._lock = threading.RLock()
        if end_value is None:
            if math.isfinite(self.support_end):
                end_value = float(value(np.array(self.support_end)))
            else:
                end_value = 0.0
        self.end_value = float(end_value)

    def __repr__(self):
        return '<WeightFunction %s on the %s>' % (self.spec(),
                                                  self.geometry.value)

    def spec(self):
        return self.family.spec()

    @property
    def has_derivative(self):
        return self._derivative is not None

    @property
    def domain_end(self):
        if self.geometry is Geometry.DISC:
            return 1.0
        return self.support_end

    @property
    def normalization(self):
        """Recorded end point values and total variation."""
        start = float(self.evaluate(0.0))
        out = {'start': start, 'end': self.end_value,
               'variation': abs(self.end_value - start)}
        if self.geometry is Geometry.HALFPLANE:
            out['variation'] = abs(self.end_value)
        for key in ('C0', 'M'):
            if key in self.extras:
                out[key] = self.extras[key]
        return out

    def _check_domain(self, t):
        t = np.asarray(t, dtype=float)
        if np.any(t < -_EDGE_SLACK) or np.any(np.isnan(t)):
            raise DomainError('weight %s evaluated at negative t'
                              % self.spec())
        if self.geometry is Geometry.DISC:
            if np.any(t > 1.0 + _EDGE_SLACK):
                raise DomainError('disc weight %s evaluated beyond t = 1'
                                  % self.spec())
            return np.clip(t, 0.0, 1.0)
        return np.maximum(t, 0.0)

    def memo(self, key, compute):
        """Return the cached result of `compute()` under `key`."""
        with self._lock:
            if key in self._memo:
                self._memo.move_to_end(key)
                return self._memo[key]
        result = compute()
        with self._lock:
            self._memo[key] = result
            while len(self._memo) > _MEMO_ENTRIES:
                self._memo.popitem(last=False)
        return result

    def _call(self, kind, fn, t):
        scalar = np.ndim(t) == 0
        t = self._check_domain(t)
        if self._memoize and t.size <= _MEMO_MAX_SIZE:
            key = (kind, t.shape, t.tobytes())
            out = self.memo(key, lambda: np.asarray(fn(t), dtype=float))
            out = out.copy()
        else:
            out = np.asarray(fn(t), dtype=float)
        if scalar:
            return float(out)
        return out

    def evaluate(self, t):
        """Return omega(t); scalars in, scalars out."""
        return self._call('value', self._value, t)

    __call__ = evaluate

    def derivative(self, t):
        """Return omega'(t).

        :Raises PreconditionError: if the weight carries no derivative.
        """
        if self._derivative is None:
            raise PreconditionError('weight %s has no derivative'
                                    % self.spec())
        return self._call('derivative', self._derivative, t)

    def atoms_in(self, lo, hi):
        return [(p, m) for p, m in self.atoms if lo <= p <= hi]

    def mass_cutoff(self, fraction=1e-40):
        """Return a point past which |omega| stays below `fraction` times
        |omega(0)| (plane weights decaying to zero).

        :Raises PreconditionError: if no such point exists within
            1e6 scale lengths.
        """
        top = abs(self.evaluate(0.0))
        u = self.scale
        while abs(self.evaluate(u)) > fraction * top:
            u *= 2.0
            if u > 1e6 * self.scale:
                raise PreconditionError('weight %s does not decay fast '
                                        'enough to truncate its domain'
                                        % self.spec())
        return u

    def stieltjes(self, g, a=None, b=None, rtol=None, atol=0.0,
                  order=None, what='Stieltjes integral'):
        """Integrate `g` against d omega over [a, b], atoms included.

        `g` is vectorized like the quadrature integrands: it maps a 1-D
        array of t to values with t on the first axis.

        :Returns: (value, error estimate)
        """
        lo = 0.0 if a is None else float(a)
        hi = self.domain_end if b is None else float(b)

        def integrand(t):
            gt = np.asarray(g(t))
            dw = self.derivative(t)
            dw = dw.reshape(dw.shape + (1,) * (gt.ndim - 1))
            return np.where(dw == 0, 0.0, gt * dw)

        if math.isfinite(hi):
            value, err = integrate(integrand, lo, hi, rtol, atol,
                                   self.breakpoints, self.singular,
                                   order=order, what=what)
        else:
            value, err = integrate_halfline(
                integrand, lo, self.scale, rtol, atol, self.breakpoints,
                singular_start=lo in self.singular, order=order,
                what=what)
        for pos, mass in self.atoms_in(lo, hi):
            value = value + mass * np.asarray(g(np.array([pos])))[0]
        return value, err


ClassCondition = collections.namedtuple('ClassCondition',
                                        'condition evidence verdict')


class WeightClassReport(object):
    """Outcome of `validate_class`: one `ClassCondition` per condition of
    the weight's target class."""

    __slots__ = ('weight', 'checked_conditions')

    def __init__(self, weight, checked_conditions):
        self.weight = weight
        self.checked_conditions = tuple(checked_conditions)

    @property
    def geometry(self):
        return self.weight.geometry

    @property
    def passed(self):
        return all(c.verdict is not Verdict.FAIL
                   for c in self.checked_conditions)

    def failed(self):
        return [c for c in self.checked_conditions
                if c.verdict is Verdict.FAIL]

    def as_dict(self):
        return {'weight': self.weight.spec(),
                'geometry': self.geometry.value,
                'passed': self.passed,
                'conditions': [{'condition': c.condition,
                                'evidence': c.evidence,
                                'verdict': c.verdict.value}
                               for c in self.checked_conditions]}

    def __repr__(self):
        return '<WeightClassReport %s: %s>' % (
            self.weight.spec(),
            ', '.join('%s=%s' % (c.condition, c.verdict.value)
                      for c in self.checked_conditions))


def _walk_equivalents(w, key):
    while w is not None:
        if key in w.extras:
            return w.extras[key]
        w = w.extras.get('equivalent')
    return None


def power_data(w):
    """Return (coef, alpha, cap) if `w` is a scaled, possibly capped power
    weight, else None. On the disc the weight is coef*(1-t)**alpha and cap
    is None."""
    return _walk_equivalents(w, 'power')


def decay_data(w):
    """Return (gamma, rho, mu) if `w` is an exponential-decay plane weight,
    else None."""
    return _walk_equivalents(w, 'exp_decay')


# -- power family ---------------------------------------------------------

def _power_disc(alpha, coef, family):
    def value(t):
        return coef * (1.0 - t) ** alpha

    def deriv(t):
        with np.errstate(divide='ignore'):
            return -coef * alpha * (1.0 - t) ** (alpha - 1.0)

    return WeightFunction(Geometry.DISC, family, value, deriv,
                          singular=(1.0,) if alpha < 1 else (),
                          end_value=0.0,
                          extras={'power': (coef, alpha, None)})


def _power_halfplane(alpha, coef, cap, family):
    e = 1.0 + alpha

    def value(t):
        s = t if cap is None else np.minimum(t, cap)
        if e == 0:
            return np.full(np.shape(s), coef)
        return coef * s ** e

    def deriv(t):
        if e == 0:
            return np.zeros(np.shape(t))
        with np.errstate(divide='ignore'):
            d = coef * e * t ** alpha
        if cap is not None:
            d = np.where(t < cap, d, 0.0)
        return d

    if cap is None:
        end_value = coef if e == 0 else math.inf
        scale = 1.0
    else:
        end_value = coef * cap ** e
        scale = cap
    return WeightFunction(
        Geometry.HALFPLANE, family, value, deriv,
        support_end=math.inf if cap is None else cap,
        breakpoints=() if cap is None else (cap,),
        singular=(0.0,) if alpha < 0 else (),
        scale=scale,
        class_alpha=alpha if cap is None else -1.0,
        atoms=((0.0, coef),) if e == 0 else (),
        end_value=end_value,
        extras={'power': (coef, alpha, cap)})


def make_power_weight(geometry, alpha, cap=None, coef=1.0):
    """Return the power weight of exponent `alpha`.

    Disc: ``coef*(1-t)**alpha`` with alpha > 0. Half-plane:
    ``coef*min(t, cap)**(1+alpha)`` with alpha >= -1; without `cap` the
    weight is unbounded and belongs to the class of exponent alpha, with a
    cap it is constant beyond `cap` and belongs to the class of exponent -1.

    :Raises DomainError: for the plane, or when a class condition on
        `alpha`, `cap` or `coef` is violated.
    """
    geometry = Geometry.coerce(geometry)
    alpha = float(alpha)
    coef = float(coef)
    if not coef > 0:
        raise DomainError('power weight needs coef > 0, got %g' % coef)
    params = {'alpha': alpha}
    if cap is not None:
        cap = float(cap)
        params['cap'] = cap
    if coef != 1.0:
        params['coef'] = coef
    family = Family('power', params)
    if geometry is Geometry.DISC:
        if not alpha > 0:
            raise DomainError('disc power weight needs alpha > 0 (positive '
                              'variation near t = 1), got %g' % alpha)
        if cap is not None:
            raise DomainError('disc power weights take no cap')
        return _power_disc(alpha, coef, family)
    if geometry is Geometry.HALFPLANE:
        if alpha < -1:
            raise DomainError('half-plane power weight needs alpha >= -1 '
                              '(omega ~ t**(1+alpha) at infinity), got %g'
                              % alpha)
        if cap is not None and not cap > 0:
            raise DomainError('cap must be positive, got %g' % cap)
        return _power_halfplane(alpha, coef, cap, family)
    raise DomainError('power weights are defined on the disc and the '
                      'half-plane only')


def make_linear_weight(geometry, slope=1.0, cap=None):
    """Return ``1 - t`` on the disc or ``slope*min(t, cap)`` on the
    half-plane."""
    geometry = Geometry.coerce(geometry)
    slope = float(slope)
    if geometry is Geometry.DISC:
        if slope != 1.0 or cap is not None:
            raise DomainError('the disc linear weight is 1 - t; it takes '
                              'neither slope nor cap')
        return _power_disc(1.0, 1.0, Family('linear'))
    if geometry is not Geometry.HALFPLANE:
        raise DomainError('linear weights are defined on the disc and the '
                          'half-plane only')
    if not slope > 0:
        raise DomainError('slope must be positive, got %g' % slope)
    params = {}
    if slope != 1.0:
        params['slope'] = slope
    if cap is not None:
        cap = float(cap)
        if not cap > 0:
            raise DomainError('cap must be positive, got %g' % cap)
        params['cap'] = cap
    return _power_halfplane(0.0, slope, cap, Family('linear', params))


# -- named families -------------------------------------------------------

def _exp_decay(gamma, rho, mu, family):
    log_c0 = math.log(rho) + mu * math.log(gamma) - gammaln(mu)
    c0 = math.exp(log_c0)
    k = mu * rho - 1.0

    def value(t):
        return gammaincc(mu, gamma * t ** rho)

    def deriv(t):
        with np.errstate(divide='ignore', under='ignore', invalid='ignore'):
            out = -c0 * np.exp(-gamma * t ** rho) * t ** k
        return np.where(np.isnan(out), 0.0, out)

    return WeightFunction(Geometry.PLANE, family, value, deriv,
                          singular=(0.0,) if k < 0 else (),
                          scale=gamma ** (-1.0 / rho), end_value=0.0,
                          extras={'exp_decay': (gamma, rho, mu), 'C0': c0})


def _capped_growth(family, value, deriv, cap, growth_rate):
    if cap is None:
        return WeightFunction(Geometry.HALFPLANE, family, value, deriv,
                              growth=growth_rate, end_value=math.inf)
    return WeightFunction(Geometry.HALFPLANE, family, value, deriv,
                          support_end=cap, breakpoints=(cap,),
                          scale=min(cap, 1.0), class_alpha=-1.0)


def make_named_weight(geometry, tag, **params):
    """Build one of the named weights.

    :Parameters:
        `tag` : `NamedWeight` or str
            ``exp-simple`` (plane, e**-t), ``exp-decay`` (plane, parameters
            gamma, rho, mu), ``exp-minus-one`` (half-plane, e**t - 1) or
            ``log-one-plus`` (half-plane, log(1 + t)). The half-plane tags
            take an optional ``cap``.
    :Raises DomainError: for an incompatible geometry/tag pair or bad
        parameters.
    """
    geometry = Geometry.coerce(geometry)
    tag = NamedWeight.coerce(tag)
    plane_tags = (NamedWeight.EXP_SIMPLE, NamedWeight.EXP_DECAY)
    if (tag in plane_tags) != (geometry is Geometry.PLANE):
        raise DomainError('%s is not defined on the %s'
                          % (tag.value, geometry.value))

    if tag is NamedWeight.EXP_SIMPLE:
        if params:
            raise DomainError('exp-simple takes no parameters')

        def value(t):
            return np.exp(-t)

        def deriv(t):
            return -np.exp(-t)

        return WeightFunction(Geometry.PLANE, Family('exp-simple'), value,
                              deriv, end_value=0.0,
                              extras={'exp_decay': (1.0, 1.0, 1.0),
                                      'C0': 1.0})

    if tag is NamedWeight.EXP_DECAY:
        try:
            gamma = float(params.pop('gamma', 1.0))
            rho = float(params.pop('rho', 1.0))
            mu = float(params.pop('mu', 1.0))
        except (TypeError, ValueError):
            raise DomainError('exp-decay parameters must be real numbers')
        if params:
            raise DomainError('unexpected exp-decay parameters: %s'
                              % ', '.join(sorted(params)))
        if not (gamma > 0 and rho > 0 and mu > 0):
            raise DomainError('exp-decay needs gamma, rho, mu > 0')
        return _exp_decay(gamma, rho, mu,
                          Family('exp-decay', {'gamma': gamma, 'rho': rho,
                                               'mu': mu}))

    cap = params.pop('cap', None)
    if params:
        raise DomainError('unexpected %s parameters: %s'
                          % (tag.value, ', '.join(sorted(params))))
    if cap is not None:
        cap = float(cap)
        if not cap > 0:
            raise DomainError('cap must be positive, got %g' % cap)
    family = Family(tag.value, {} if cap is None else {'cap': cap})

    def clipped(t):
        return t if cap is None else np.minimum(t, cap)

    def inside(t, d):
        return d if cap is None else np.where(t < cap, d, 0.0)

    if tag is NamedWeight.EXP_GROWTH_MINUS_ONE:
        def value(t):
            return np.expm1(clipped(t))

        def deriv(t):
            with np.errstate(over='ignore'):
                return inside(t, np.exp(clipped(t)))

        return _capped_growth(family, value, deriv, cap, 1.0)

    def value(t):
        return np.log1p(clipped(t))

    def deriv(t):
        return inside(t, 1.0 / (1.0 + clipped(t)))

    return _capped_growth(family, value, deriv, cap, 0.0)


# -- Volterra squares -----------------------------------------------------

def _grid_values(fn, grid):
    with np.errstate(all='ignore'):
        return np.asarray(fn(grid), dtype=float)


def _check_disc_square(w):
    if not w.has_derivative:
        raise PreconditionError('Volterra square needs a differentiable '
                                'weight')
    grid = np.linspace(0.0, 1.0, 257)[1:-1]
    if np.any(_grid_values(w.derivative, grid) > 1e-12):
        raise PreconditionError('Volterra square needs a nonincreasing '
                                'weight')
    if abs(w.evaluate(0.0) - 1.0) > 1e-12:
        raise PreconditionError('Volterra square needs omega(0) = 1, got %.12g'
                                % w.evaluate(0.0))
    if abs(w.end_value) > 1e-12:
        raise PreconditionError('Volterra square needs omega(1) = 0, got %.12g'
                                % w.end_value)


def _disc_square(w):
    _check_disc_square(w)
    tol = _config.get('inner_tol')
    sing = (0.0, 1.0) if 1.0 in w.singular else (0.0,)

    def value(x):
        x = np.atleast_1d(x).ravel()

        def integrand(u):
            sigma = x[None, :] + (1.0 - x[None, :]) * u[:, None]
            inner = w.evaluate(np.clip(x[None, :] / sigma, 0.0, 1.0))
            return inner * (-w.derivative(sigma)) * (1.0 - x[None, :])

        out, _ = integrate(integrand, 0.0, 1.0, tol, 1e-16, singular=sing,
                           what='disc Volterra square')
        return out

    def deriv(x):
        x = np.atleast_1d(x).ravel()

        def integrand(u):
            sigma = x[None, :] + (1.0 - x[None, :]) * u[:, None]
            a = w.derivative(np.clip(x[None, :] / sigma, 0.0, 1.0))
            b = w.derivative(sigma)
            prod = np.where((a == 0) | (b == 0), 0.0, a * b)
            return -prod / sigma * (1.0 - x[None, :])

        out, _ = integrate(integrand, 0.0, 1.0, tol, 1e-16, singular=sing,
                           what='disc Volterra square derivative')
        return out

    return WeightFunction(Geometry.DISC, Family('volterra', bases=(w,)),
                          _shaped(value), _shaped(deriv),
                          singular=(0.0, 1.0), end_value=0.0, memoize=True)


def _shaped(fn):
    """Lift a function of a flat array to arrays of any shape."""
    def wrapper(t):
        t = np.asarray(t, dtype=float)
        if t.size == 0:
            return np.zeros(t.shape)
        return np.asarray(fn(t.ravel())).reshape(t.shape)
    return wrapper


def _check_plane_square(w):
    if not w.has_derivative:
        raise PreconditionError('Volterra square needs a differentiable '
                                'weight')
    if abs(w.end_value) > 1e-12:
        raise PreconditionError('plane Volterra square needs omega(+inf) = 0')
    grid = w.scale * np.logspace(-9, 2, 221)
    d = _grid_values(w.derivative, grid)
    problems = []
    if np.any(d > 0):
        problems.append("omega' < 0")
    peak = np.max(np.abs(d[np.isfinite(d)])) if np.any(np.isfinite(d)) \
        else math.inf
    if not np.all(np.isfinite(d)) or abs(d[0]) > 10.0 * abs(d[20]) + 1e-300:
        problems.append("omega' bounded")
    if abs(d[0]) > 1e-6 * peak:
        problems.append('finite integral of omega\'(t)/t')
    if not problems:
        return
    if decay_data(w) is not None:
        _logger.warning('plane Volterra square of %s: hypotheses (%s) not '
                        'met; accepted for the exponential-decay family',
                        w.spec(), ', '.join(problems))
        return
    raise PreconditionError('plane Volterra square needs %s'
                            % ', '.join(problems))


def _plane_square(w):
    _check_plane_square(w)
    tol = _config.get('inner_tol')

    def mapped(x, kernel):
        x = np.atleast_1d(x).ravel()
        length = np.maximum(np.sqrt(x), 1.0) * w.scale

        def integrand(s):
            ratio = (s / (1.0 - s))[:, None]
            t = length[None, :] * ratio
            jac = length[None, :] / ((1.0 - s) ** 2)[:, None]
            with np.errstate(divide='ignore', over='ignore'):
                arg = x[None, :] / t
            vals = kernel(arg, t)
            return np.where(vals == 0, 0.0, vals * jac)

        out, _ = integrate(integrand, 0.0, 1.0, tol, 1e-300,
                           singular=(0.0, 1.0), what='plane Volterra square')
        return out

    def value(x):
        return mapped(x, lambda arg, t: _product(
            w.evaluate(np.minimum(arg, 1e300)), -w.derivative(t)))

    def deriv(x):
        return mapped(x, lambda arg, t: _product(
            w.derivative(np.minimum(arg, 1e300)), -w.derivative(t)) / t)

    return WeightFunction(Geometry.PLANE, Family('volterra', bases=(w,)),
                          _shaped(value), _shaped(deriv), singular=(0.0,),
                          scale=w.scale ** 2, end_value=0.0, memoize=True)


def _product(a, b):
    return np.where((a == 0) | (b == 0), 0.0, a * b)


def _halfplane_square(w):
    if not w.has_derivative:
        raise PreconditionError('Volterra square needs a differentiable '
                                'weight')
    if abs(w.evaluate(0.0)) > 1e-14:
        raise PreconditionError('half-plane Volterra square needs '
                                'omega(0) = 0, got %.6g' % w.evaluate(0.0))
    tol = _config.get('inner_tol')
    support = 2.0 * w.support_end
    base_breaks = np.array(w.breakpoints, dtype=float)
    breaks = set(w.breakpoints)
    breaks.update(a + b for a in w.breakpoints for b in w.breakpoints)
    singular_lo = 0.0 in w.singular

    def convolve(x, deriv_first):
        x = np.minimum(np.atleast_1d(x).ravel(), support)
        if base_breaks.size:
            per_row = np.concatenate(
                [np.broadcast_to(base_breaks, (x.size, base_breaks.size)),
                 x[:, None] - base_breaks[None, :]], axis=1)
        else:
            per_row = None
        edges = row_edges(np.zeros_like(x), x, per_row,
                          singular_lo=singular_lo,
                          singular_hi=singular_lo and deriv_first)

        def integrand(t, rows):
            rest = np.maximum(x[rows][:, None] - t, 0.0)
            head = w.derivative(rest) if deriv_first else w.evaluate(rest)
            return _product(head, w.derivative(t))

        out, _ = integrate_rows(integrand, edges, tol, 1e-300,
                                what='half-plane Volterra square')
        return out

    def value(x):
        return convolve(x, False)

    def deriv(x):
        return np.where(np.atleast_1d(x).ravel() < support,
                        convolve(x, True), 0.0)

    alpha = w.class_alpha
    return WeightFunction(
        Geometry.HALFPLANE, Family('volterra', bases=(w,)),
        _shaped(value), _shaped(deriv), support_end=support,
        breakpoints=sorted(b for b in breaks if 0 < b < support),
        singular=(0.0,) if singular_lo else (),
        scale=2.0 * w.scale,
        class_alpha=None if alpha is None else 1.0 + 2.0 * alpha,
        growth=w.growth, memoize=True,
        end_value=None if math.isfinite(support) else math.inf)


def volterra_square(w):
    """Return the Volterra square of `w`.

    Disc: ``omega(x) = -int_x^1 w(x/s) dw(s)``; plane:
    ``omega(x) = -int_0^inf w(x/t) dw(t)``; half-plane:
    ``omega(x) = int_0^x w(x - t) dw(t)``. Values and derivatives are
    computed by quadrature of the defining integrals and memoized.

    :Raises PreconditionError: if `w` misses the hypotheses of the
        construction on its geometry.
    """
    if w.geometry is Geometry.DISC:
        square = _disc_square(w)
    elif w.geometry is Geometry.PLANE:
        square = _plane_square(w)
    else:
        square = _halfplane_square(w)
    _logger.info('built %s', square.spec())
    return square


# -- derived projection weights -------------------------------------------

def projection_constant(w1, p, eps):
    """Return ``M = (int_0^inf [-w1']**(q(1-eps)) dt)**(1/q)`` with
    ``1/p + 1/q = 1`` (the supremum of ``[-w1']**(1-eps)`` when p = 1).

    :Raises PreconditionError: if the integral (or supremum) diverges.
    """
    p = float(p)
    eps = float(eps)
    if p == 1.0:
        grid = w1.scale * np.logspace(-9, 3, 481)
        vals = _grid_values(lambda t: (-w1.derivative(t)) ** (1.0 - eps),
                            grid)
        if not np.all(np.isfinite(vals)):
            raise PreconditionError('M_{1,eps} is infinite: '
                                    "[-omega_1']**(1-eps) is unbounded")
        return float(np.max(vals))
    q = p / (p - 1.0)
    power = q * (1.0 - eps)
    if power == 0:
        raise PreconditionError('M_{p,eps} diverges for eps = 1: the '
                                'integrand is 1 on [0, +inf)')

    def integrand(t):
        d = -w1.derivative(t)
        with np.errstate(divide='ignore', under='ignore'):
            return np.where(d == 0, 0.0, np.abs(d) ** power)

    try:
        value, _ = integrate_halfline(integrand, 0.0, w1.scale,
                                      singular_start=True,
                                      what='M_{p,eps} integral')
    except AccuracyError:
        raise PreconditionError('M_{p,eps} diverges for p=%g, eps=%g'
                                % (p, eps))
    return value ** (1.0 / q)


def _derived_disc(w1, p, family):
    grid = np.linspace(0.0, 1.0, 257)
    diffs = np.diff(w1.evaluate(grid))
    if not (np.all(diffs < 0) or np.all(diffs > 0)):
        raise PreconditionError('omega_1 must be strictly monotone on '
                                '[0, 1]')
    pd = power_data(w1)
    if pd is not None:
        coef, alpha, _ = pd
        beta = (alpha - 1.0) * p + 1.0
        if not beta > 0:
            raise PreconditionError(
                "divergent integral of |omega_1'|**p near t = 1 "
                '(exponent %g)' % beta)
        return _power_disc(beta, (coef * alpha) ** p / beta, family)

    def value(t):
        t = np.atleast_1d(t).ravel()

        def integrand(u):
            lam = t[None, :] + (1.0 - t[None, :]) * u[:, None]
            return np.abs(w1.derivative(lam)) ** p * (1.0 - t[None, :])

        out, _ = integrate(integrand, 0.0, 1.0, _config.get('inner_tol'),
                           1e-16, singular=w1.singular,
                           what='derived disc weight')
        return out

    def deriv(t):
        return -np.abs(w1.derivative(t)) ** p

    derived = WeightFunction(Geometry.DISC, family, _shaped(value), deriv,
                             singular=w1.singular, end_value=0.0,
                             memoize=True)
    try:
        derived.evaluate(0.0)
    except AccuracyError:
        raise PreconditionError("divergent integral of |omega_1'|**p")
    return derived


def _derived_plane(w1, p, eps, family):
    if eps is None:
        raise PreconditionError('plane derived weights need eps in (0, 1]')
    eps = float(eps)
    if not 0.0 < eps <= 1.0:
        raise PreconditionError('eps must lie in (0, 1], got %g' % eps)
    power = p * eps

    def density(t):
        d = -w1.derivative(t)
        with np.errstate(divide='ignore', under='ignore'):
            return np.where(d == 0, 0.0, np.abs(d) ** power)

    try:
        norm, _ = integrate_halfline(density, 0.0, w1.scale,
                                     singular_start=True,
                                     what='derived weight normalisation')
    except AccuracyError:
        raise PreconditionError("divergent integral of [-omega_1']**(p eps)")
    if abs(norm - 1.0) > 1e-8:
        raise PreconditionError("int_0^inf [-omega_1']**(p eps) dt is "
                                '%.10g, not 1; normalise omega_1 first'
                                % norm)
    m_const = projection_constant(w1, p, eps)
    extras = {'M': m_const}
    dd = decay_data(w1)
    if dd is not None:
        gamma, rho, mu = dd
        mu_new = (power * (mu * rho - 1.0) + 1.0) / rho
        if mu_new > 0:
            derived = _exp_decay(power * gamma, rho, mu_new, family)
            derived.extras.update(extras)
            return derived

    def value(t):
        t = np.atleast_1d(t).ravel()
        out, _ = integrate_halfline(
            lambda off: density(t[None, :] + off[:, None]), 0.0, w1.scale,
            _config.get('inner_tol'), 1e-300, singular_start=True,
            what='derived plane weight')
        return out

    def deriv(t):
        return -density(t)

    return WeightFunction(Geometry.PLANE, family, _shaped(value), deriv,
                          singular=w1.singular, scale=w1.scale,
                          end_value=0.0, extras=extras, memoize=True)


def _derived_halfplane(w1, p, family):
    delta = w1.support_end
    if not math.isfinite(delta):
        raise PreconditionError('omega_1 must be constant beyond some '
                                'finite Delta')
    grid = np.linspace(0.0, delta, 257)
    if not np.all(np.diff(w1.evaluate(grid)) > 0):
        raise PreconditionError('omega_1 must be strictly increasing on '
                                '[0, Delta]')
    inner = np.linspace(0.0, delta, 258)[1:-1]
    slope = _grid_values(w1.derivative, inner)
    nondecreasing = bool(np.all(np.diff(slope) >= -1e-12 * np.abs(slope[1:])))
    extras = {'delta0': delta, 'base_derivative_nondecreasing': nondecreasing}
    pd = power_data(w1)
    if pd is not None and pd[2] is not None:
        coef, alpha, cap = pd
        a_new = alpha * p
        coef_new = ((coef * (1.0 + alpha)) ** p
                    / ((a_new + 1.0) * 2.0 ** (a_new + 1.0)))
        derived = _power_halfplane(a_new, coef_new, 2.0 * cap, family)
        derived.extras.update(extras)
        return derived

    def value(s):
        half = np.minimum(np.atleast_1d(s).ravel(), 2.0 * delta) / 2.0
        bps = np.array(w1.breakpoints, dtype=float)
        per_row = np.broadcast_to(bps, (half.size, bps.size)) \
            if bps.size else None
        edges = row_edges(np.zeros_like(half), half, per_row,
                          singular_lo=0.0 in w1.singular)

        def integrand(t, rows):
            return np.abs(w1.derivative(t)) ** p

        out, _ = integrate_rows(integrand, edges, _config.get('inner_tol'),
                                1e-300, what='derived half-plane weight')
        return out

    def deriv(s):
        s = np.asarray(s, dtype=float)
        inside = s < 2.0 * delta
        vals = 0.5 * np.abs(w1.derivative(np.minimum(s, 2.0 * delta) / 2.0)) \
            ** p
        return np.where(inside, vals, 0.0)

    return WeightFunction(Geometry.HALFPLANE, family, _shaped(value), deriv,
                          support_end=2.0 * delta,
                          breakpoints=[2.0 * b for b in w1.breakpoints],
                          singular=[2.0 * s for s in w1.singular],
                          scale=2.0 * w1.scale, class_alpha=-1.0,
                          extras=extras, memoize=True)


def derive_projection_weight(w1, p, eps=None):
    """Build the weight omega paired with `w1` by the projection bounds.

    Disc: ``omega(t) = int_t^1 |w1'|**p``. Plane:
    ``omega(t) = int_t^inf [-w1']**(p*eps)`` (requires unit total mass and
    a finite projection constant, recorded as ``extras['M']``). Half-plane:
    ``omega(s) = int_0^(s/2) [w1']**p``.

    :Raises DomainError: if p < 1.
    :Raises PreconditionError: if `w1` has no derivative, is not strictly
        monotone, fails the plane normalisation or a defining integral
        diverges.
    """
    p = float(p)
    if p < 1:
        raise DomainError('p must be >= 1, got %g' % p)
    if not w1.has_derivative:
        raise PreconditionError("derived weight needs omega_1'")
    params = {'p': p}
    if w1.geometry is Geometry.PLANE:
        params['eps'] = None if eps is None else float(eps)
    family = Family('derived', params, bases=(w1,))
    if w1.geometry is Geometry.DISC:
        derived = _derived_disc(w1, p, family)
    elif w1.geometry is Geometry.PLANE:
        derived = _derived_plane(w1, p, eps, family)
    else:
        derived = _derived_halfplane(w1, p, family)
    _logger.info('built %s', derived.spec())
    return derived


# -- argument substitutions -----------------------------------------------

def squash(w, kind):
    """Return ``w(x**2)`` (SQUARE_ARG; disc and plane) or ``w(2t)``
    (DOUBLE_ARG; half-plane) with the derivative chained.

    :Raises DomainError: on a geometry mismatch.
    """
    if not isinstance(kind, SquashKind):
        try:
            kind = SquashKind(kind)
        except ValueError:
            raise DomainError('unknown squash kind %r' % (kind,))
    if kind is SquashKind.SQUARE_ARG:
        if w.geometry is Geometry.HALFPLANE:
            raise DomainError('x**2 substitution applies to the disc and '
                              'the plane')
        family = Family('squash2', bases=(w,))
        dd = decay_data(w)
        if dd is not None:
            gamma, rho, mu = dd
            return _exp_decay(gamma, 2.0 * rho, mu, family)

        def value(x):
            return w.evaluate(x * x)

        def deriv(x):
            return _product(2.0 * x, w.derivative(x * x))

        return WeightFunction(w.geometry, family, value,
                              deriv if w.has_derivative else None,
                              singular=[math.sqrt(s) for s in w.singular],
                              breakpoints=[math.sqrt(b)
                                           for b in w.breakpoints],
                              scale=math.sqrt(w.scale),
                              end_value=w.end_value)
    if w.geometry is not Geometry.HALFPLANE:
        raise DomainError('2t substitution applies to the half-plane')
    family = Family('squashx2', bases=(w,))
    pd = power_data(w)
    if pd is not None:
        coef, alpha, cap = pd
        return _power_halfplane(alpha, coef * 2.0 ** (1.0 + alpha),
                                None if cap is None else cap / 2.0, family)

    def value(t):
        return w.evaluate(2.0 * t)

    def deriv(t):
        return 2.0 * w.derivative(2.0 * t)

    return WeightFunction(Geometry.HALFPLANE, family, value,
                          deriv if w.has_derivative else None,
                          support_end=w.support_end / 2.0,
                          breakpoints=[b / 2.0 for b in w.breakpoints],
                          singular=[s / 2.0 for s in w.singular],
                          scale=w.scale / 2.0, class_alpha=w.class_alpha,
                          growth=2.0 * w.growth,
                          atoms=[(a / 2.0, m) for a, m in w.atoms],
                          end_value=w.end_value)


# -- class membership -----------------------------------------------------

def _disc_conditions(w):
    from holospaces.moments import disc_moments

    grid = np.unique(np.concatenate(
        [np.linspace(0.0, 1.0, 65), 1.0 - 2.0 ** -np.arange(1, 21)]))
    vals = w.evaluate(grid)
    rises = np.diff(vals) > 1e-12 * (1.0 + np.abs(vals[1:]))
    if np.any(rises):
        at = grid[1:][rises][0]
        yield ClassCondition('variation', 'omega increases near t=%.6g' % at,
                             Verdict.FAIL)
    else:
        var = vals[:-1] - w.end_value
        if np.all(var > 0) and np.all(np.isfinite(var)):
            yield ClassCondition(
                'variation', 'min variation %.3g at delta=%.8g'
                % (var.min(), grid[:-1][np.argmin(var)]), Verdict.PASS)
        else:
            yield ClassCondition('variation', 'variation vanishes before '
                                 't = 1', Verdict.FAIL)

    n_max = _config.get('disc_n_max')
    moments = None
    try:
        moments = disc_moments(w, n_max)
    except ClassViolationError as e:
        yield ClassCondition('nonzero-moments', e.get_message(), Verdict.FAIL)
    except AccuracyError as e:
        yield ClassCondition('nonzero-moments', e.get_message(),
                             Verdict.INCONCLUSIVE)
    else:
        yield ClassCondition('nonzero-moments', 'min |Delta_n| = %.3g for '
                             'n <= %d' % (np.min(np.abs(moments.values)),
                                          n_max), Verdict.PASS)
    if moments is None:
        yield ClassCondition('moment-growth', 'moments unavailable',
                             Verdict.INCONCLUSIVE)
        return
    n = np.arange(n_max // 4, n_max + 1, dtype=float)
    logs = np.log(np.abs(moments.values[n_max // 4:]))
    design = np.stack([np.ones_like(n), n, np.log(n)], axis=1)
    coef = np.linalg.lstsq(design, logs, rcond=None)[0]
    slope = coef[1]
    evidence = ('log|Delta_n| ~ %.3g + %.3g n + %.3g log n on [%d, %d]'
                % (coef[0], slope, coef[2], n_max // 4, n_max))
    if slope >= -1e-3:
        _logger.warning('%s: moment growth condition consistent on '
                        'n <= %d only', w.spec(), n_max)
        yield ClassCondition('moment-growth', evidence, Verdict.INCONCLUSIVE)
    else:
        yield ClassCondition('moment-growth', evidence, Verdict.FAIL)


def _plane_conditions(w):
    from holospaces.moments import plane_moments

    grid = w.scale * np.linspace(0.0, 40.0, 401)
    vals = w.evaluate(grid)
    live = vals > 1e-250
    diffs = np.diff(vals[live])
    if np.all(diffs < 0):
        yield ClassCondition('strictly-decreasing', 'checked on [0, %.3g]'
                             % grid[live][-1], Verdict.PASS)
    else:
        yield ClassCondition('strictly-decreasing', 'not decreasing near '
                             't=%.6g' % grid[1:][live[1:]][np.argmax(
                                 diffs >= 0)], Verdict.FAIL)
    start = w.evaluate(0.0)
    yield ClassCondition('unit-at-zero', 'omega(0) = %.15g' % start,
                         Verdict.PASS if abs(start - 1.0) <= 1e-10
                         else Verdict.FAIL)
    n_max = _config.get('plane_n_max')
    try:
        moments = plane_moments(w, n_max)
    except (AccuracyError, ClassViolationError) as e:
        yield ClassCondition('finite-moments', e.get_message(), Verdict.FAIL)
        return
    n = np.arange(1, n_max + 1)
    with np.errstate(divide='ignore'):
        roots = np.exp(np.log(moments.values[1:]) / n)
    increasing = bool(np.all(np.diff(roots) > 0))
    yield ClassCondition('finite-moments', 'Delta_n finite for n <= %d; '
                         'n-th roots %s, last %.4g'
                         % (n_max, 'increasing' if increasing
                            else 'not monotone', roots[-1]), Verdict.PASS)


def _halfplane_conditions(w, alpha):
    top = w.support_end if math.isfinite(w.support_end) else 10.0 * w.scale
    grid = np.linspace(0.0, top, 401)
    vals = w.evaluate(grid)
    small = w.evaluate(2.0 ** -np.arange(1, 31))
    problems = []
    if np.any(np.diff(vals) < -1e-12 * (1.0 + np.abs(vals[1:]))):
        problems.append('decreases on [0, %.3g]' % top)
    if abs(w.evaluate(0.0) - w.evaluate(1e-14)) > 1e-8 * max(1.0,
                                                              abs(vals[-1])):
        problems.append('omega(0) != omega(+0)')
    positive = small[small > 0]
    if positive.size == 0 or not np.all(np.diff(positive) < 0):
        problems.append('not strictly increasing near 0')
    if problems:
        yield ClassCondition('monotone', '; '.join(problems), Verdict.FAIL)
    else:
        yield ClassCondition('monotone', 'nondecreasing on [0, %.3g], '
                             'continuous at 0' % top, Verdict.PASS)

    if alpha is None:
        alpha = w.class_alpha
    if alpha is None:
        yield ClassCondition('power-comparable', 'no exponent declared and '
                             'no power-like growth', Verdict.FAIL)
        return
    t0 = max(1.0, 2.0 * w.support_end if math.isfinite(w.support_end)
             else 1.0) * max(w.scale, 1.0)
    ts = np.logspace(math.log10(t0), math.log10(t0) + 6.0, 25)
    with np.errstate(all='ignore'):
        ratio = w.evaluate(ts) / ts ** (1.0 + alpha)
    if not (np.all(np.isfinite(ratio)) and np.all(ratio > 0)):
        yield ClassCondition('power-comparable', 'omega/t**%g leaves '
                             '(0, inf) on [%.3g, %.3g]' % (1.0 + alpha, t0,
                                                            ts[-1]),
                             Verdict.FAIL)
        return
    slope = np.polyfit(np.log(ts), np.log(ratio), 1)[0]
    evidence = ('log(omega/t**%g) slope %.3g on [%.3g, %.3g]'
                % (1.0 + alpha, slope, t0, ts[-1]))
    if abs(slope) <= 0.02:
        yield ClassCondition('power-comparable', evidence,
                             Verdict.INCONCLUSIVE)
    else:
        yield ClassCondition('power-comparable', evidence, Verdict.FAIL)


def validate_class(w, alpha=None):
    """Sample the class conditions of `w` on fixed grids.

    Disc: variation on [0, 1] and on 1 - 2**-k (k <= 20), nonzero moments
    up to the configured N_max, and the growth of |Delta_n| fitted on
    [N_max/4, N_max]. Plane: strict decrease on [0, 40*scale], omega(0) = 1
    and finite moments. Half-plane: monotonicity and continuity at 0, and
    comparability with t**(1+alpha) for the declared (or given) `alpha` on
    six decades.

    Failures are verdicts, never exceptions. Asymptotic conditions can
    only come out ``inconclusive`` at best.
    """
    if w.geometry is Geometry.DISC:
        conditions = list(_disc_conditions(w))
    elif w.geometry is Geometry.PLANE:
        conditions = list(_plane_conditions(w))
    else:
        conditions = list(_halfplane_conditions(w, alpha))
    report = WeightClassReport(w, conditions)
    for c in conditions:
        if c.verdict is Verdict.INCONCLUSIVE:
            _logger.warning('%s: %s inconclusive (%s)', w.spec(),
                            c.condition, c.evidence)
    _logger.debug('%r', report)
    return report


# -- tabulated weights ----------------------------------------------------

def load_tabulated(path, geometry):
    """Load a piecewise linear weight from a CSV file with columns
    ``t, omega``.

    A repeated t marks a jump; it becomes an atom of the Stieltjes measure.
    The weight is constant beyond the last node.
    """
    geometry = Geometry.coerce(geometry)
    ts = []
    ws = []
    with open(path, newline='') as f:
        reader = csv.reader(f)
        for row in reader:
            if not row or row[0].strip().startswith('#'):
                continue
            try:
                t, omega = float(row[0]), float(row[1])
            except (ValueError, IndexError):
                if not ts:
                    # header line
                    continue
                raise DomainError('%s: malformed row %r' % (path, row))
            ts.append(t)
            ws.append(omega)
    if len(ts) < 2:
        raise DomainError('%s: need at least two nodes' % path)
    order = np.argsort(np.asarray(ts), kind='stable')
    ts = np.asarray(ts)[order]
    ws = np.asarray(ws)[order]
    knots, first = np.unique(ts, return_index=True)
    last = np.r_[first[1:], ts.size] - 1
    left = ws[first]
    right = ws[last]
    if knots[0] != 0:
        raise DomainError('%s: the first node must be t = 0' % path)
    if geometry is Geometry.DISC and knots[-1] != 1:
        raise DomainError('%s: disc weights need the last node at t = 1'
                          % path)
    widths = np.diff(knots)
    slopes = (left[1:] - right[:-1]) / widths

    def locate(t):
        return np.clip(np.searchsorted(knots, t, side='right') - 1, 0,
                       knots.size - 1)

    def value(t):
        k = locate(t)
        seg = np.minimum(k, slopes.size - 1)
        inside = k < slopes.size
        return np.where(inside, right[seg] + slopes[seg] * (t - knots[seg]),
                        right[-1])

    def deriv(t):
        k = locate(t)
        seg = np.minimum(k, slopes.size - 1)
        return np.where(k < slopes.size, slopes[seg], 0.0)

    atoms = [(knots[j], right[j] - left[j]) for j in range(knots.size)]
    if geometry is Geometry.HALFPLANE:
        atoms[0] = (0.0, right[0])
    w = WeightFunction(geometry, Family('tabulated', {'path': path}), value,
                       deriv, support_end=knots[-1],
                       breakpoints=knots[1:-1] if geometry is Geometry.DISC
                       else knots[1:],
                       scale=knots[-1] if geometry is Geometry.DISC
                       else max(knots[-1] / 8.0, 1e-3),
                       class_alpha=-1.0 if geometry is Geometry.HALFPLANE
                       else None,
                       atoms=atoms, end_value=right[-1])
    _logger.info('loaded %d nodes from %s', knots.size, path)
    return w
