"""Moment data of a weight.

Disc: ``Delta_n = -int_0^1 t**n d omega(t)``, which equals
``n int_0^1 x**(n-1) omega(x) dx`` when omega(1) = 0. Plane:
``Delta_n = -int_0^inf t**n d omega(t)``. Half-plane: the Laplace symbol
``I(t) = int_0^inf exp(-t x) d omega(x) = t int_0^inf exp(-t x) omega(x) dx``.
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('MomentSequence', 'LaplaceSymbol', 'disc_moments',
           'plane_moments', 'laplace_symbol')
__docformat__ = 'restructuredtext'

import logging
import math
import operator

import numpy as np
from scipy.special import exp1, gamma as gamma_fn, gammainc, gammaln

from holospaces import _config
from holospaces.exceptions import (AccuracyError, ClassViolationError,
                                   ConsistencyError, DomainError,
                                   UnsupportedRepresentationError)
from holospaces.quadrature import (integrate, integrate_halfline,
                                   integrate_rows, row_edges)
from holospaces.weights import Geometry, decay_data, power_data

_logger = logging.getLogger('holospaces.moments')

_CROSS_CHECK_N = 64


class MomentSequence(object):
    """Delta_0..Delta_N of a disc or plane weight.

    :IVariables:
        `values` : read-only ndarray
        `accuracy` : read-only ndarray
            Estimated relative error per entry.
        `log_values` : read-only ndarray
            Natural logarithms of the entries; finite even where `values`
            overflows (plane closed forms).
        `source` : str
            Grammar text of the weight.
        `method` : str
            ``closed`` or ``quadrature``.
    """

    __slots__ = ('geometry', 'values', 'accuracy', 'log_values', 'source',
                 'method')

    def __init__(self, geometry, values, accuracy, source, method,
                 log_values=None):
        self.geometry = geometry
        self.values = _frozen(values)
        self.accuracy = _frozen(accuracy)
        if log_values is None:
            with np.errstate(divide='ignore'):
                log_values = np.log(np.abs(self.values))
        self.log_values = _frozen(log_values)
        self.source = source
        self.method = method

    @property
    def N(self):
        return self.values.size - 1

    def __len__(self):
        return self.values.size

    def __getitem__(self, n):
        return self.values[n]

    def as_rows(self):
        """Yield (n, Delta_n, estimated relative error)."""
        for n in range(self.values.size):
            yield n, float(self.values[n]), float(self.accuracy[n])

    def __repr__(self):
        return '<MomentSequence %s N=%d (%s)>' % (self.source, self.N,
                                                   self.method)


def _frozen(a):
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


def _check_order(N):
    try:
        N = operator.index(N)
    except TypeError:
        raise DomainError('N must be an integer, got %r' % (N,))
    if N < 0:
        raise DomainError('N must be >= 0, got %d' % N)
    return N


def _check_signs(values, w):
    if np.any(values == 0):
        n = int(np.nonzero(values == 0)[0][0])
        raise ClassViolationError('Delta_%d(%s) = 0' % (n, w.spec()))
    signs = np.sign(values)
    if np.any(signs != signs[0]):
        n = int(np.nonzero(signs != signs[0])[0][0])
        raise ClassViolationError('Delta_n(%s) changes sign at n = %d'
                                  % (w.spec(), n))


def _disc_closed(w, N):
    coef, alpha, _ = power_data(w)
    n = np.arange(N + 1, dtype=float)
    logs = (math.log(coef) + gammaln(n + 1.0) + gammaln(alpha + 1.0)
            - gammaln(n + alpha + 1.0))
    return np.exp(logs), np.full(N + 1, 1e-15) * (1.0 + n), logs


def _disc_quadrature(w, N, tol):
    start = w.evaluate(0.0)
    end = w.end_value
    values = np.empty(N + 1)
    errors = np.zeros(N + 1)
    values[0] = start - end
    if N >= 1:
        n = np.arange(1, N + 1, dtype=float)

        def integrand(x):
            with np.errstate(under='ignore'):
                powers = x[:, None] ** (n[None, :] - 1.0)
            return n[None, :] * powers * w.evaluate(x)[:, None]

        raw, err = integrate(integrand, 0.0, 1.0, tol, 0.0, w.breakpoints,
                             w.singular, what='disc moments of %s' % w.spec())
        values[1:] = raw - end
        errors[1:] = err
    if abs(end) <= 1e-15 and w.has_derivative and N >= 1:
        m = min(N, _CROSS_CHECK_N)
        k = np.arange(m + 1, dtype=float)

        def powers(t):
            with np.errstate(under='ignore'):
                return t[:, None] ** k[None, :]

        other, _ = w.stieltjes(powers, rtol=tol,
                               what='Stieltjes moments of %s' % w.spec())
        other = -np.asarray(other)
        gap = float(np.max(np.abs(other - values[:m + 1])
                           / np.abs(values[:m + 1])))
        _logger.debug('%s: integration by parts gap %.3g', w.spec(), gap)
        if gap > 1e-9:
            raise ConsistencyError('the two disc moment formulas of %s'
                                   % w.spec(), gap)
    with np.errstate(divide='ignore', invalid='ignore'):
        acc = np.where(values != 0, errors / np.abs(values), np.inf)
    return values, acc


def disc_moments(w, N, tol=None):
    """Return Delta_0..Delta_N of the disc weight `w`.

    Power weights use the Beta closed form. Otherwise the moments come from
    ``n int x**(n-1) omega`` and, when omega(1) = 0, are checked against
    ``-int t**n d omega`` for n <= 64.

    :Raises DomainError: for a non-disc weight or a negative N.
    :Raises ClassViolationError: if a moment vanishes or the signs change.
    :Raises ConsistencyError: if the two formulas disagree beyond 1e-9.
    :Raises AccuracyError: if the quadrature does not converge.
    """
    if w.geometry is not Geometry.DISC:
        raise DomainError('disc moments of a %s weight' % w.geometry.value)
    N = _check_order(N)
    if tol is None:
        tol = _config.get('tol')

    def compute():
        if power_data(w) is not None:
            values, acc, logs = _disc_closed(w, N)
            method = 'closed'
        else:
            values, acc = _disc_quadrature(w, N, tol)
            logs = None
            method = 'quadrature'
        _check_signs(values, w)
        _logger.debug('%s: Delta_0..Delta_%d by %s', w.spec(), N, method)
        return MomentSequence(Geometry.DISC, values, acc, w.spec(), method,
                              logs)

    return w.memo(('disc_moments', N, tol), compute)


def _plane_closed(w, N):
    gamma, rho, mu = decay_data(w)
    n = np.arange(N + 1, dtype=float)
    logs = (gammaln(mu + n / rho) - gammaln(mu)
            - (n / rho) * math.log(gamma))
    with np.errstate(over='ignore'):
        values = np.exp(logs)
    return values, np.full(N + 1, 1e-15) * (1.0 + n), logs


def _plane_quadrature(w, N, tol):
    n = np.arange(N + 1, dtype=float)

    def integrand(t):
        d = -w.derivative(t)
        with np.errstate(divide='ignore', over='ignore', invalid='ignore',
                         under='ignore'):
            logs = n[None, :] * np.log(t)[:, None] + np.log(d)[:, None]
            out = np.exp(logs)
        return np.where(d[:, None] > 0, out, 0.0)

    try:
        values, errors = integrate_halfline(
            integrand, 0.0, w.scale, tol, 0.0, w.breakpoints,
            singular_start=0.0 in w.singular,
            what='plane moments of %s' % w.spec())
    except AccuracyError as e:
        bad = np.ones(N + 1, dtype=bool)
        if e.value is not None and e.error is not None:
            val = np.atleast_1d(e.value)
            err = np.atleast_1d(e.error)
            with np.errstate(invalid='ignore'):
                bad = ~(np.isfinite(val) & (err <= tol * np.abs(val)))
        first = int(np.nonzero(bad)[0][0]) if np.any(bad) else N
        raise AccuracyError('plane moment Delta_%d of %s diverges or does '
                            'not converge' % (first, w.spec()),
                            e.achieved, e.target)
    for pos, mass in w.atoms:
        values = values - mass * pos ** n
    values = np.atleast_1d(values)
    return values, np.atleast_1d(errors) / np.abs(values)


def plane_moments(w, N, tol=None):
    """Return Delta_0..Delta_N of the plane weight `w`.

    Exponential-decay weights (e**-t included) use the Gamma closed form.

    :Raises AccuracyError: naming the first moment whose tail diverges.
    """
    if w.geometry is not Geometry.PLANE:
        raise DomainError('plane moments of a %s weight' % w.geometry.value)
    N = _check_order(N)
    if tol is None:
        tol = _config.get('tol')

    def compute():
        if decay_data(w) is not None:
            values, acc, logs = _plane_closed(w, N)
            method = 'closed'
        else:
            values, acc = _plane_quadrature(w, N, tol)
            logs = None
            method = 'quadrature'
        _check_signs(values, w)
        return MomentSequence(Geometry.PLANE, values, acc, w.spec(), method,
                              logs)

    return w.memo(('plane_moments', N, tol), compute)


# -- Laplace symbol -------------------------------------------------------

def _e1_scaled(t):
    """exp(t) E1(t), with the asymptotic series past overflow."""
    t = np.asarray(t, dtype=float)
    out = np.empty_like(t)
    big = t > 700.0
    small = ~big
    out[small] = np.exp(t[small]) * exp1(t[small])
    if np.any(big):
        tb = t[big]
        term = 1.0 / tb
        acc = term.copy()
        for k in range(1, 20):
            term = -term * k / tb
            acc = acc + term
        out[big] = acc
    return out


def _closed_form(w):
    pd = power_data(w)
    if pd is not None:
        coef, alpha, cap = pd
        e = 1.0 + alpha
        if e == 0:
            return lambda t: np.full(np.shape(t), coef)
        g2 = gamma_fn(1.0 + e)
        if cap is None:
            return lambda t: coef * g2 / t ** e
        return lambda t: coef * g2 * gammainc(e, cap * t) / t ** e
    name = w.family.name
    cap = w.family.get('cap')
    if name == 'exp-minus-one':
        if cap is None:
            return lambda t: 1.0 / (t - 1.0)

        def capped(t):
            d = t - 1.0
            safe = np.where(d == 0, 1.0, d)
            return np.where(d == 0, cap, -np.expm1(-d * cap) / safe)

        return capped
    if name == 'log-one-plus':
        if cap is None:
            return _e1_scaled
        return lambda t: (_e1_scaled(t)
                          - np.exp(-t * cap) * _e1_scaled(t * (1.0 + cap)))
    return None


class LaplaceSymbol(object):
    """``I(t)`` of a half-plane weight, for t above its growth rate."""

    __slots__ = ('weight', 'method', '_closed', '_tol')

    def __init__(self, weight, method, closed, tol):
        self.weight = weight
        self.method = method
        self._closed = closed
        self._tol = tol

    @property
    def growth(self):
        return self.weight.growth

    def __repr__(self):
        return '<LaplaceSymbol %s (%s)>' % (self.weight.spec(), self.method)

    def evaluate(self, t):
        """Return I(t) for scalar or array `t`.

        :Raises DomainError: if some t <= 0 or t <= the growth rate.
        """
        scalar = np.ndim(t) == 0
        ta = np.atleast_1d(np.asarray(t, dtype=float))
        if np.any(ta <= 0) or np.any(ta <= self.weight.growth):
            raise DomainError('the Laplace integral of %s needs t > %g'
                              % (self.weight.spec(),
                                 max(0.0, self.weight.growth)))
        if self._closed is not None:
            out = np.asarray(self._closed(ta), dtype=float)
        else:
            out = self._quadrature(ta.ravel()).reshape(ta.shape)
        return float(out[0]) if scalar else out

    __call__ = evaluate

    def _quadrature(self, t):
        w = self.weight
        g = w.growth
        horizon = 60.0 / (1.0 - g / t)
        hi = np.minimum(horizon, w.support_end * t)
        bps = np.array(w.breakpoints, dtype=float)
        per_row = bps[None, :] * t[:, None] if bps.size else None
        edges = row_edges(np.zeros_like(t), hi, per_row,
                          singular_lo=0.0 in w.singular)

        def integrand(y, rows):
            tr = t[rows][:, None]
            d = w.derivative(y / tr)
            with np.errstate(under='ignore', over='ignore'):
                return np.where(d == 0, 0.0, np.exp(-y) * d / tr)

        out, _ = integrate_rows(integrand, edges, self._tol, 1e-300,
                                what='Laplace symbol of %s' % w.spec())
        for pos, mass in w.atoms:
            out = out + mass * np.exp(-t * pos)
        return out

    def by_values(self, t):
        """``t int_0^inf exp(-t x) omega(x) dx`` by quadrature (the second
        formula for I, valid when omega(0) = 0)."""
        w = self.weight
        ta = np.atleast_1d(np.asarray(t, dtype=float)).ravel()
        horizon = 60.0 / (1.0 - w.growth / ta)
        hi = np.minimum(horizon, w.support_end * ta)
        bps = np.array(w.breakpoints, dtype=float)
        per_row = bps[None, :] * ta[:, None] if bps.size else None
        edges = row_edges(np.zeros_like(ta), hi, per_row)

        def integrand(y, rows):
            with np.errstate(under='ignore', over='ignore'):
                return np.exp(-y) * w.evaluate(y / ta[rows][:, None])

        out, _ = integrate_rows(integrand, edges, self._tol, 1e-300,
                                what='Laplace symbol of %s by values'
                                % w.spec())
        if math.isfinite(w.support_end):
            out = out + w.end_value * np.exp(-w.support_end * ta)
        return out


def laplace_symbol(w, method='auto', tol=None, check=True):
    """Return the `LaplaceSymbol` of the half-plane weight `w`.

    :Parameters:
        `method` : str
            ``closed`` (power-like, e**t - 1 and log(1 + t) families),
            ``quadrature``, or ``auto`` for the closed form when there is
            one.
        `check` : bool
            When omega(0) = 0, compare both formulas for I at t in
            {0.5, 1, 2} (shifted above the growth rate).
    :Raises ConsistencyError: if the formulas disagree beyond 1e-8.
    """
    if w.geometry is not Geometry.HALFPLANE:
        raise DomainError('Laplace symbol of a %s weight' % w.geometry.value)
    if tol is None:
        tol = _config.get('tol')
    closed = _closed_form(w)
    if method == 'closed':
        if closed is None:
            raise UnsupportedRepresentationError('closed-form Laplace '
                                                 'symbol', w.spec())
    elif method == 'quadrature':
        closed = None
    elif method != 'auto':
        raise DomainError('unknown Laplace method %r' % (method,))
    symbol = LaplaceSymbol(w, 'closed' if closed is not None
                           else 'quadrature', closed, tol)
    if check and abs(w.evaluate(0.0)) == 0:
        ts = np.array([0.5, 1.0, 2.0]) + w.growth
        direct = symbol.evaluate(ts)
        other = symbol.by_values(ts)
        gap = float(np.max(np.abs(direct - other) / np.abs(direct)))
        _logger.debug('%s: Laplace formulas differ by %.3g', w.spec(), gap)
        if gap > 1e-8:
            raise ConsistencyError('the two Laplace formulas of %s'
                                   % w.spec(), gap)
    return symbol
