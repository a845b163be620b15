"""Area norms of the weighted spaces and Hardy norms.

Area norms:

- disc and plane: ``||f||**p = (1/2pi) int dtheta int |f(rho e^(i theta))|**p
  (-d omega(rho**2))``, integrated in u = rho**2;
- half-plane: ``||f||**p = int dx int |f(x + i y)|**p d omega(2 y)``, the
  atom omega(0) included. This is reported as `value_unnormalized`; the
  normalized value divides the integral by 2 pi, which matches the
  normalized Hardy norm under the p = 2 isometries.

Hardy norms take the supremum of the 1/(2pi) normalized p-means over a
ladder of radii ``1 - 2**-k`` (disc) or heights ``2**-k`` (half-plane),
ending on the boundary itself when the function is holomorphic beyond it.
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('QuadratureSpec', 'NormResult', 'area_norm', 'hardy_norm')
__docformat__ = 'restructuredtext'

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.special import binom

from holospaces import _config
from holospaces.exceptions import (AccuracyError, DomainError,
                                   UnsupportedRepresentationError)
from holospaces.functions import RationalHalfPlane, TaylorSeries, evaluate
from holospaces.quadrature import circle_mean, integrate, integrate_line
from holospaces.weights import Geometry

_logger = logging.getLogger('holospaces.norms')

_X_POLICIES = ('map', 'majorant')


def _power_of_two(name, n):
    n = int(n)
    if n < 1 or n & (n - 1):
        raise DomainError('%s must be a power of two, got %d' % (name, n))
    return n


class QuadratureSpec(object):
    """Discretization settings of the norm computations.

    :IVariables:
        `radial_order` : int
            Gauss-Legendre order of the radial (vertical) integrals.
        `angular_start`, `angular_max` : int
            First and largest trapezoid node counts of the circle means.
        `x_truncation` : str
            ``map`` integrates the half-plane lines over all of R through a
            rational map; ``majorant`` cuts them at the point where the
            ``sum |b_j| / |x|**k_j`` majorant of a rational function leaves
            less than the tolerance outside.
        `ladder_depth` : int
            Number of rungs of the Hardy ladders, at least three.
        `tol` : float
    """

    __slots__ = ('radial_order', 'angular_start', 'angular_max',
                 'x_truncation', 'ladder_depth', 'tol')

    def __init__(self, radial_order=None, angular_start=16,
                 angular_max=1 << 16, x_truncation='map', ladder_depth=None,
                 tol=None):
        if radial_order is None:
            radial_order = _config.get('gauss_order')
        if ladder_depth is None:
            ladder_depth = _config.get('hardy_ladder_depth')
        self.radial_order = _power_of_two('radial_order', radial_order)
        self.angular_start = _power_of_two('angular_start', angular_start)
        self.angular_max = _power_of_two('angular_max', angular_max)
        if self.angular_max < self.angular_start:
            raise DomainError('angular_max below angular_start')
        if x_truncation not in _X_POLICIES:
            raise DomainError('x_truncation must be one of %s'
                              % ', '.join(_X_POLICIES))
        self.x_truncation = x_truncation
        self.ladder_depth = int(ladder_depth)
        # the extrapolation of pointwise functions uses the last two steps
        if self.ladder_depth < 3:
            raise DomainError('a Hardy ladder needs at least three rungs, '
                              'got %d' % self.ladder_depth)
        self.tol = _config.get('tol') if tol is None else float(tol)

    def ladder(self, geometry):
        """Return the rungs, ordered toward the boundary."""
        k = np.arange(1, self.ladder_depth + 1, dtype=float)
        if Geometry.coerce(geometry) is Geometry.DISC:
            return 1.0 - 2.0 ** -k
        return 2.0 ** -k

    def as_dict(self):
        return dict((name, getattr(self, name)) for name in self.__slots__)


class NormResult(object):
    """A computed norm.

    `value` is the normalized norm. `ladder` holds (rung, mean) pairs for
    Hardy norms and is empty for area norms.
    """

    __slots__ = ('value', 'value_normalized', 'value_unnormalized', 'p',
                 'space', 'geometry', 'est_rel_err', 'ladder', 'monotone',
                 'extrapolated', 'provenance')

    def __init__(self, value_normalized, value_unnormalized, p, space,
                 geometry, est_rel_err, ladder=(), monotone=None,
                 extrapolated=None, provenance=None):
        self.value = self.value_normalized = float(value_normalized)
        self.value_unnormalized = float(value_unnormalized)
        self.p = float(p)
        self.space = space
        self.geometry = geometry
        self.est_rel_err = float(est_rel_err)
        self.ladder = tuple((float(r), float(m)) for r, m in ladder)
        self.monotone = monotone
        self.extrapolated = extrapolated
        self.provenance = dict(provenance or {})

    def __float__(self):
        return self.value

    def __repr__(self):
        return '<NormResult %s p=%g %.12g (rel err %.2g)>' % (
            self.space, self.p, self.value, self.est_rel_err)

    def as_dict(self):
        return {'value': self.value,
                'value_unnormalized': self.value_unnormalized,
                'p': self.p,
                'space': self.space,
                'geometry': self.geometry.value,
                'est_rel_err': self.est_rel_err,
                'ladder': [list(rung) for rung in self.ladder],
                'monotone': self.monotone,
                'extrapolated': self.extrapolated,
                'provenance': self.provenance}


def _check_p(p):
    p = float(p)
    if not p >= 1 or math.isinf(p):
        raise DomainError('norms are computed for 1 <= p < inf, got p = %g'
                          % p)
    return p


def _abs_power(values, p):
    a = np.abs(values)
    if p == 2.0:
        return a * a
    return a ** p


def _root(total, err, p):
    total = max(float(total), 0.0)
    if total == 0.0:
        return 0.0, 0.0
    return total ** (1.0 / p), float(np.max(err)) / (p * total)


# -- real lines of the half-plane --------------------------------------------

def _decay_order(f, extra=8):
    """Return the order m of the leading term c_m z**-m of `f` at infinity.

    ``b / (z + i c)**k`` contributes ``b binom(-k, j) (i c)**j`` to the
    coefficient of z**-(k + j); terms that cancel push m past the smallest
    k_j.
    """
    terms = [(b, c, k) for b, c, k in f.terms if b != 0]
    if not terms:
        return math.inf
    kmin = min(t[2] for t in terms)
    for m in range(kmin, max(t[2] for t in terms) + extra + 1):
        coef = 0j
        size = 0.0
        for b, c, k in terms:
            if k > m:
                continue
            part = b * binom(-k, m - k) * (1j * c) ** (m - k)
            coef += part
            size += abs(part)
        if size > 0 and abs(coef) > 1e-12 * size:
            return m
    return math.inf


def _check_decay(f, p):
    if _decay_order(f) * p <= 1.0:
        raise DomainError('|%s|**%g is not integrable along horizontal '
                          'lines' % (f.spec(), p))


def _line_cut(f, p, tol):
    """Return X with ``int_{|x| > X} |f(x + i y)|**p dx <= tol`` for all
    y >= 0, from the majorant ``B / |x|**k``; None when that majorant is not
    integrable."""
    terms = [(b, c, k) for b, c, k in f.terms if b != 0]
    if not terms:
        return 1.0
    bound = sum(abs(b) for b, _, _ in terms)
    e = min(t[2] for t in terms) * p - 1.0
    if e <= 0.0:
        return None
    # 2 B**p X**-e / e <= tol
    x = (2.0 * bound ** p / (e * tol)) ** (1.0 / e)
    return max(1.0, x)


def _line_integrals(f, ys, p, spec, what):
    """Return (integral of |f(x + i y)|**p over x, error) for every y."""
    ys = np.asarray(ys, dtype=float)
    tol = spec.tol

    def horizontal(x):
        pts = x[:, None] + 1j * ys[None, :]
        return _abs_power(evaluate(f, pts), p)

    if isinstance(f, RationalHalfPlane):
        _check_decay(f, p)
    if spec.x_truncation == 'majorant':
        if not isinstance(f, RationalHalfPlane):
            raise UnsupportedRepresentationError('majorant x-truncation',
                                                 type(f).__name__)
        cut = _line_cut(f, p, tol * 1e-3)
        if cut is not None:
            n = int(math.ceil(math.log2(cut))) if cut > 1 else 0
            knots = 2.0 ** np.arange(-2, n + 1)
            knots = knots[knots < cut]
            breaks = np.concatenate([-knots[::-1], [0.0], knots])
            _logger.debug('%s: lines cut at |x| = %.3g', what, cut)
            return integrate(horizontal, -cut, cut, tol, tol * 1e-3, breaks,
                             order=spec.radial_order, what=what)
        _logger.debug('%s: termwise majorant of %s is not integrable, '
                      'mapping the lines instead', what, f.spec())
    scale = 1.0
    if isinstance(f, RationalHalfPlane) and f.terms:
        scale = max(c for _, c, _ in f.terms)
    return integrate_line(horizontal, 0.0, scale, tol, tol * 1e-3,
                          order=spec.radial_order, what=what)


# -- area norms --------------------------------------------------------------

def _radial_area(w, f, p, spec):
    tol = spec.tol

    def radial(u):
        rho = np.sqrt(u)

        def angular(theta):
            zeta = rho[None, :] * np.exp(1j * theta)[:, None]
            return _abs_power(evaluate(f, zeta), p)

        value, _ = circle_mean(angular, tol, tol * 1e-3, spec.angular_start,
                               spec.angular_max, what='angular p-mean')
        return np.asarray(value)

    hi = w.mass_cutoff() if w.geometry is Geometry.PLANE else None
    value, err = w.stieltjes(radial, 0.0, hi, rtol=tol, atol=tol * 1e-3,
                             order=spec.radial_order, what='area norm of %s'
                             % _label(f))
    return -float(value), float(np.max(err))


def _halfplane_area(w, f, p, spec):
    def vertical(s):
        value, _ = _line_integrals(f, s / 2.0, p, spec,
                                   'horizontal p-integrals')
        return np.asarray(value)

    value, err = w.stieltjes(vertical, rtol=spec.tol, atol=spec.tol * 1e-3,
                             order=spec.radial_order,
                             what='half-plane area norm of %s' % _label(f))
    return float(value), float(np.max(err))


def _label(f):
    spec = getattr(f, 'spec', None)
    return spec() if spec is not None else repr(f)


def area_norm(w, p, f, spec=None):
    """Return the `NormResult` of `f` in the space A^p of the weight `w`.

    :Raises DomainError: for p < 1, for a Taylor series offered on the
        half-plane (or a half-plane function elsewhere) and for rational
        functions whose p-th power is not integrable along lines.
    :Raises AccuracyError: if a quadrature does not converge.
    """
    p = _check_p(p)
    spec = spec or QuadratureSpec()
    g = w.geometry
    _check_function(g, f)
    if g is Geometry.HALFPLANE:
        raw, err = _halfplane_area(w, f, p, spec)
        normalized = raw / (2.0 * np.pi)
    else:
        raw, err = _radial_area(w, f, p, spec)
        normalized = raw
    if raw < 0:
        if raw < -10.0 * err - 1e-300:
            raise AccuracyError('negative p-th power norm %.3g of %s'
                                % (raw, _label(f)))
        raw = normalized = 0.0
    value, rel = _root(normalized, err * normalized / raw if raw else 0.0, p)
    unnormalized, _ = _root(raw, err, p)
    _logger.debug('||%s||_{%g,%s} = %.12g', _label(f), p, w.spec(), value)
    return NormResult(value, unnormalized, p, 'ap', g, rel,
                      provenance={'weight': w.spec(),
                                  'function': _label(f),
                                  'quadrature': spec.as_dict()})


def _check_function(geometry, f):
    if geometry is Geometry.HALFPLANE:
        if isinstance(f, TaylorSeries):
            raise DomainError('Taylor series are not half-plane test '
                              'functions')
    elif getattr(f, 'geometry', None) is Geometry.HALFPLANE:
        raise DomainError('%s lives on the half-plane, not the %s'
                          % (_label(f), geometry.value))


# -- Hardy norms -------------------------------------------------------------

def _disc_mean(f, r, p, spec):
    tol = spec.tol

    def angular(theta):
        return _abs_power(evaluate(f, r * np.exp(1j * theta)), p)

    value, err = circle_mean(angular, tol, tol * 1e-3, spec.angular_start,
                             spec.angular_max,
                             what='circle p-mean at r = %g' % r)
    return float(value), float(err)


def _line_mean(f, y, p, spec):
    value, err = _line_integrals(f, [y], p, spec,
                                 'line p-integral at y = %g' % y)
    return (float(np.ravel(value)[0]) / (2.0 * np.pi),
            float(np.ravel(err)[0]) / (2.0 * np.pi))


def hardy_norm(geometry, p, f, spec=None):
    """Return the `NormResult` of `f` in H^p of the disc or the half-plane.

    The ladder rungs are evaluated in parallel. The value is the largest
    rung; no extrapolation is added to it. When the function does not
    extend past the boundary the geometric extrapolation of the last
    increments is reported in `extrapolated` and bounds `est_rel_err`.

    :Raises DomainError: on the plane or for p < 1.
    :Raises AccuracyError: if the means do not settle along the ladder.
    """
    p = _check_p(p)
    geometry = Geometry.coerce(geometry)
    if geometry is Geometry.PLANE:
        raise DomainError('Hardy spaces are defined on the disc and the '
                          'half-plane')
    _check_function(geometry, f)
    spec = spec or QuadratureSpec()
    rungs = list(spec.ladder(geometry))
    margin = getattr(f, 'boundary_margin', 0.0)
    boundary = margin > 0
    if boundary:
        rungs.append(1.0 if geometry is Geometry.DISC else 0.0)
    mean = _disc_mean if geometry is Geometry.DISC else _line_mean
    with ThreadPoolExecutor(max_workers=_config.get('workers')) as pool:
        results = list(pool.map(lambda r: mean(f, r, p, spec), rungs))
    means = np.array([m for m, _ in results])
    errs = np.array([e for _, e in results])
    steps = np.diff(means)
    scale = max(float(np.max(means)), 1e-300)
    monotone = bool(np.all(steps >= -10.0 * (errs[1:] + errs[:-1])
                           - 1e-13 * scale))
    if not monotone:
        _logger.warning('p-means of %s are not monotone along the ladder',
                        _label(f))
    top = int(np.argmax(means))
    sup = float(means[top])
    extrapolated = None
    rel = float(errs[top]) / scale
    if not boundary:
        last, prev = steps[-1], steps[-2]
        if abs(last) > spec.tol * scale:
            q = last / prev if prev != 0 else math.inf
            if not 0 <= q < 1:
                raise AccuracyError('p-means of %s do not settle along the '
                                    'ladder' % _label(f),
                                    abs(last) / scale, spec.tol)
            extrapolated = float(means[-1] + last * q / (1.0 - q))
            rel = max(rel, abs(extrapolated - sup) / scale)
    value, rel_root = _root(sup, rel * scale, p)
    unnormalized = (2.0 * np.pi) ** (1.0 / p) * value
    ladder = [(r, m ** (1.0 / p) if m > 0 else 0.0)
              for r, m in zip(rungs, means)]
    if extrapolated is not None:
        extrapolated = max(extrapolated, 0.0) ** (1.0 / p)
    _logger.debug('||%s||_{H^%g} = %.12g over %d rungs', _label(f), p, value,
                  len(rungs))
    return NormResult(value, unnormalized, p, 'hp', geometry, rel_root,
                      ladder, monotone, extrapolated,
                      {'function': _label(f), 'boundary_rung': boundary,
                       'quadrature': spec.as_dict()})
