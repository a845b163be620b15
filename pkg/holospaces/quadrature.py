"""Composite Gauss-Legendre rules with doubling refinement.

All integrators take vectorized integrands: a callable receiving a 1-D
array of nodes and returning an array whose first axis runs over the nodes.
Trailing axes are integrated componentwise, which is how whole moment
sequences or whole grids of evaluation points are computed in one pass.

Panels are graded geometrically toward the end points so that integrable
end point singularities (``t**-0.5``, ``log t``) and far tails behind a
rational map are resolved without special casing.
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('gauss_legendre', 'unit_pattern', 'panel_edges', 'integrate',
           'integrate_halfline', 'integrate_line', 'row_edges',
           'integrate_rows', 'circle_mean', 'sampled_circle_mean')
__docformat__ = 'restructuredtext'

import logging
import threading

import numpy as np
from scipy.special import roots_legendre

from holospaces import _config
from holospaces.exceptions import AccuracyError

_logger = logging.getLogger('holospaces.quadrature')

# bound on the number of integrand values materialized at once
_CHUNK_VALUES = 1 << 21

_rules = {}
_rules_lock = threading.Lock()


def gauss_legendre(order):
    """Return the cached (nodes, weights) of the `order`-point rule on
    [-1, 1]."""
    with _rules_lock:
        rule = _rules.get(order)
        if rule is None:
            x, w = roots_legendre(order)
            rule = (np.asarray(x, dtype=float), np.asarray(w, dtype=float))
            _rules[order] = rule
    return rule


def unit_pattern(panels=8, depth_lo=None, depth_hi=None):
    """Panel edges on [0, 1]: `panels` uniform panels, the first and last
    of which are split geometrically `depth_lo` / `depth_hi` times."""
    if depth_lo is None:
        depth_lo = _config.get('grading_depth')
    if depth_hi is None:
        depth_hi = _config.get('grading_depth')
    h = 1.0 / panels
    pieces = [np.linspace(0.0, 1.0, panels + 1)]
    if depth_lo > 0:
        pieces.append(h * 2.0 ** -np.arange(1, depth_lo + 1))
    if depth_hi > 0:
        pieces.append(1.0 - h * 2.0 ** -np.arange(1, depth_hi + 1))
    return np.unique(np.concatenate(pieces))


def _depth(point, singular):
    for s in singular:
        if point == s:
            return _config.get('singular_grading_depth')
    return _config.get('grading_depth')


def panel_edges(a, b, breakpoints=(), singular=(), panels=8):
    """Return sorted panel edges covering [a, b].

    :Parameters:
        `breakpoints` : sequence of float
            Points inside (a, b) where the integrand has a kink or jump.
            Out of range entries are ignored.
        `singular` : sequence of float
            Points (end points or breakpoints) next to which the integrand
            may be singular; grading there is taken much deeper.
    """
    cuts = [a]
    cuts.extend(sorted(float(p) for p in breakpoints if a < p < b))
    cuts.append(b)
    pieces = []
    for p, q in zip(cuts[:-1], cuts[1:]):
        pattern = unit_pattern(panels, _depth(p, singular),
                               _depth(q, singular))
        pieces.append(p + (q - p) * pattern)
    return np.unique(np.concatenate(pieces))


def _nodes(edges, order):
    x, w = gauss_legendre(order)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _bisect(edges):
    out = np.empty(2 * edges.size - 1)
    out[0::2] = edges
    out[1::2] = 0.5 * (edges[1:] + edges[:-1])
    return out


def _quad_sum(f, edges, order):
    nodes, weights = _nodes(edges, order)
    total = None
    chunk = None
    start = 0
    while start < nodes.size:
        if chunk is None:
            # size the chunks from the first evaluation
            probe = np.asarray(f(nodes[:1]))
            width = max(1, probe.size)
            chunk = max(256, _CHUNK_VALUES // width)
        sl = slice(start, start + chunk)
        vals = np.asarray(f(nodes[sl]))
        part = np.tensordot(weights[sl], vals, axes=(0, 0))
        total = part if total is None else total + part
        start += chunk
    return total


def _unwrap(x):
    x = np.asarray(x)
    if x.ndim == 0:
        return x[()]
    return x


def _refine(f, edges, order, rtol, atol, max_levels, what):
    with np.errstate(over='ignore', invalid='ignore', under='ignore'):
        prev = _quad_sum(f, edges, order)
        cur = prev
        err = None
        for level in range(max_levels):
            edges = _bisect(edges)
            cur = _quad_sum(f, edges, order)
            err = np.abs(cur - prev)
            if not np.all(np.isfinite(cur)):
                raise AccuracyError('%s is not finite' % what,
                                    value=_unwrap(cur), error=_unwrap(err))
            if np.all(err <= rtol * np.abs(cur) + atol):
                _logger.debug('%s converged at level %d (%d panels)',
                              what, level + 1, edges.size - 1)
                return _unwrap(cur), _unwrap(err)
            prev = cur
    scale = np.maximum(np.abs(cur), atol if atol > 0 else 1e-300)
    achieved = float(np.max(err / scale))
    raise AccuracyError('%s did not converge' % what, achieved, rtol,
                        value=_unwrap(cur), error=_unwrap(err))


def integrate(f, a, b, rtol=None, atol=0.0, breakpoints=(), singular=(),
              panels=8, order=None, max_levels=None, what='integral'):
    """Integrate `f` over the finite interval [a, b].

    Every panel is bisected until two successive estimates agree to
    ``rtol*|I| + atol`` componentwise.

    :Returns: (value, error estimate); both arrays when `f` is
        vector valued.
    :Raises AccuracyError: if the estimates do not settle within
        `max_levels` bisections or a value is not finite. The exception
        carries the last estimate in its ``value`` attribute.
    """
    if rtol is None:
        rtol = _config.get('tol')
    if order is None:
        order = _config.get('gauss_order')
    if max_levels is None:
        max_levels = _config.get('max_levels')
    if a == b:
        probe = np.asarray(f(np.array([float(a)])))
        zero = np.zeros_like(probe[0])
        return _unwrap(zero), _unwrap(zero)
    edges = panel_edges(float(a), float(b), breakpoints, singular, panels)
    return _refine(f, edges, order, rtol, atol, max_levels, what)


def _jacobian_product(vals, jac):
    vals = np.asarray(vals)
    jac = jac.reshape(jac.shape + (1,) * (vals.ndim - 1))
    return np.where(vals == 0, 0.0, vals * jac)


def integrate_halfline(f, a=0.0, scale=1.0, rtol=None, atol=0.0,
                       breakpoints=(), singular_start=False, panels=8,
                       order=None, max_levels=None, what='integral'):
    """Integrate `f` over [a, +inf) through t = a + scale*s/(1-s).

    The map turns both algebraic and exponential decay into integrands
    that vanish toward s = 1, where the panels are graded deeply.
    """
    def mapped(s):
        t = a + scale * s / (1.0 - s)
        return _jacobian_product(f(t), scale / (1.0 - s) ** 2)

    bps = [(p - a) / (scale + p - a) for p in breakpoints if p > a]
    singular = (0.0, 1.0) if singular_start else (1.0,)
    return integrate(mapped, 0.0, 1.0, rtol, atol, bps, singular, panels,
                     order, max_levels, what)


def integrate_line(f, center=0.0, scale=1.0, rtol=None, atol=0.0,
                   panels=8, order=None, max_levels=None, what='integral'):
    """Integrate `f` over the real line through x = c + L*u/(1-u**2)."""
    def mapped(u):
        d = 1.0 - u * u
        x = center + scale * u / d
        return _jacobian_product(f(x), scale * (1.0 + u * u) / (d * d))

    return integrate(mapped, -1.0, 1.0, rtol, atol, (0.0,), (-1.0, 1.0),
                     panels, order, max_levels, what)


def row_edges(lo, hi, breaks=None, panels=8, singular_lo=False,
              singular_hi=False):
    """Build a (rows, edges) matrix of panel edges, one row per interval.

    :Parameters:
        `lo`, `hi` : array of float
            Interval end points, one per row.
        `breaks` : 2-D array or None
            Per-row breakpoints; entries outside [lo, hi] are clipped onto
            the ends and NaN marks a missing breakpoint.
        `singular_lo`, `singular_hi` : bool
            Grade deeply toward `lo` / `hi`.
    """
    lo = np.asarray(lo, dtype=float).ravel()
    hi = np.asarray(hi, dtype=float).ravel()
    cols = [lo[:, None]]
    if breaks is not None and np.size(breaks):
        b = np.asarray(breaks, dtype=float).reshape(lo.size, -1)
        b = np.where(np.isnan(b), hi[:, None], b)
        b = np.clip(b, lo[:, None], hi[:, None])
        cols.append(np.sort(b, axis=1))
    cols.append(hi[:, None])
    cuts = np.concatenate(cols, axis=1)
    deep = _config.get('singular_grading_depth')
    first = unit_pattern(panels, deep if singular_lo else None)
    rest = unit_pattern(panels)
    last = unit_pattern(panels, None, deep if singular_hi else None)
    only = unit_pattern(panels, deep if singular_lo else None,
                        deep if singular_hi else None)
    pieces = []
    n_seg = cuts.shape[1] - 1
    for j in range(n_seg):
        if n_seg == 1:
            pattern = only
        elif j == 0:
            pattern = first
        elif j == n_seg - 1:
            pattern = last
        else:
            pattern = rest
        p = cuts[:, j:j + 1]
        q = cuts[:, j + 1:j + 2]
        seg = p + (q - p) * pattern[None, :]
        pieces.append(seg if j == 0 else seg[:, 1:])
    return np.concatenate(pieces, axis=1)


def _row_sums(f, edges, rows, order):
    x, w = gauss_legendre(order)
    sub = edges[rows]
    half = 0.5 * (sub[:, 1:] - sub[:, :-1])
    mid = 0.5 * (sub[:, 1:] + sub[:, :-1])
    m = sub.shape[0]
    nodes = (mid[:, :, None] + half[:, :, None] * x).reshape(m, -1)
    weights = (half[:, :, None] * w).reshape(m, -1)
    step = max(1, _CHUNK_VALUES // max(1, nodes.shape[1]))
    out = None
    for start in range(0, m, step):
        sl = slice(start, start + step)
        vals = np.asarray(f(nodes[sl], rows[sl]))
        part = np.sum(weights[sl] * vals, axis=1)
        if out is None:
            out = np.zeros(m, dtype=part.dtype)
        out[sl] = part
    return out


def integrate_rows(f, edges, rtol=None, atol=0.0, order=None,
                   max_levels=None, what='integral'):
    """Integrate one interval per row of `edges`.

    `f` is called as ``f(nodes, rows)`` where `nodes` has one row of
    quadrature nodes per entry of the integer array `rows`; it returns
    values of the same shape. Rows are refined independently and drop out
    once converged.

    :Returns: (values, errors), one entry per row.
    """
    if rtol is None:
        rtol = _config.get('tol')
    if order is None:
        order = _config.get('gauss_order')
    if max_levels is None:
        max_levels = _config.get('max_levels')
    edges = np.asarray(edges, dtype=float)
    m = edges.shape[0]
    active = np.arange(m)
    with np.errstate(over='ignore', invalid='ignore', under='ignore'):
        prev = _row_sums(f, edges, active, order)
        value = prev.copy()
        error = np.full(m, np.inf)
        for level in range(max_levels):
            edges = _bisect_rows(edges)
            cur = _row_sums(f, edges, active, order)
            err = np.abs(cur - prev)
            value[active] = cur
            error[active] = err
            if not np.all(np.isfinite(cur)):
                raise AccuracyError('%s is not finite' % what,
                                    value=value, error=error)
            done = err <= rtol * np.abs(cur) + atol
            active = active[~done]
            if active.size == 0:
                _logger.debug('%s: %d rows converged by level %d',
                              what, m, level + 1)
                return value, error
            prev = cur[~done]
    scale = np.maximum(np.abs(value[active]), 1e-300)
    achieved = float(np.max(error[active] / scale))
    raise AccuracyError('%s did not converge on %d of %d rows'
                        % (what, active.size, m), achieved, rtol,
                        value=value, error=error)


def _bisect_rows(edges):
    out = np.empty((edges.shape[0], 2 * edges.shape[1] - 1))
    out[:, 0::2] = edges
    out[:, 1::2] = 0.5 * (edges[:, 1:] + edges[:, :-1])
    return out


def circle_mean(f, rtol=None, atol=0.0, start=16, max_nodes=1 << 16,
                what='circle mean'):
    """Return ((1/2pi) * integral of f over [0, 2pi), error estimate) by the
    trapezoid rule, doubling the node count until two successive
    resolutions agree.

    `f` receives an array of angles and returns values with the angle on
    the first axis.
    """
    if rtol is None:
        rtol = _config.get('tol')
    m = start
    theta = 2.0 * np.pi * np.arange(m) / m
    prev = np.mean(np.asarray(f(theta)), axis=0)
    cur = prev
    err = np.full(np.shape(prev), np.inf)
    while m < max_nodes:
        odd = 2.0 * np.pi * (np.arange(m) + 0.5) / m
        cur = 0.5 * (prev + np.mean(np.asarray(f(odd)), axis=0))
        m *= 2
        err = np.abs(cur - prev)
        if np.all(err <= rtol * np.abs(cur) + atol):
            _logger.debug('%s converged with %d nodes', what, m)
            return _unwrap(cur), _unwrap(err)
        prev = cur
    achieved = float(np.max(err / np.maximum(np.abs(cur), 1e-300)))
    raise AccuracyError('%s: boundary resolution insufficient' % what,
                        achieved, rtol, value=_unwrap(cur),
                        error=_unwrap(err))


def sampled_circle_mean(samples):
    """Trapezoid mean of samples taken at 2*pi*j/M, with the aliasing
    estimate obtained from every second sample."""
    samples = np.asarray(samples)
    full = np.mean(samples, axis=0)
    if samples.shape[0] < 4 or samples.shape[0] % 2:
        return _unwrap(full), _unwrap(np.full(np.shape(full), np.inf))
    half = np.mean(samples[::2], axis=0)
    return _unwrap(full), _unwrap(np.abs(full - half))
