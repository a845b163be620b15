"""Holomorphic test functions.

Taylor polynomials serve the disc and the plane; finite sums of
``b/(z + i c)**k`` with ``c > 0`` serve the upper half-plane, where they are
bounded and holomorphic on the closed half-plane. `PointwiseFunction`
wraps anything else that can be evaluated, such as the half-plane images of
``L`` computed by quadrature.
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('HolomorphicFunction', 'TaylorSeries', 'RationalHalfPlane',
           'PointwiseFunction', 'evaluate', 'coefficients', 'taylor',
           'geometric', 'rational', 'monomial', 'exp_truncation', 'zero',
           'random_polynomial', 'random_rational')
__docformat__ = 'restructuredtext'

import math
import numbers

import numpy as np

from holospaces.exceptions import DomainError, UnsupportedRepresentationError
from holospaces.weights import Geometry


def _scalar_out(z, out):
    if np.ndim(z) == 0:
        return complex(out)
    return out


class HolomorphicFunction(object):
    """Base class of the test functions.

    :IVariables:
        `geometry` : `Geometry` or None
            The half-plane for rational and half-plane pointwise functions;
            None for Taylor series, which serve the disc and the plane.
        `boundary_margin` : float
            How far beyond the boundary (|z| = 1, resp. Im z = 0) the
            function stays holomorphic.
    """

    geometry = None
    boundary_margin = 0.0

    def evaluate(self, z):
        raise NotImplementedError

    def __call__(self, z):
        return self.evaluate(z)

    def spec(self):
        return '<%s>' % self.__class__.__name__

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, self.spec())


class TaylorSeries(HolomorphicFunction):
    """``sum a_n z**n`` for n <= N.

    `radius` is the radius of convergence of the function the polynomial
    stands for; evaluation at or beyond it is refused.
    """

    __slots__ = ('_coeffs', 'radius')

    def __init__(self, coeffs, radius=math.inf):
        coeffs = np.array(coeffs, dtype=complex).ravel()
        if coeffs.size == 0:
            coeffs = np.zeros(1, dtype=complex)
        self._coeffs = coeffs
        self.radius = float(radius)

    @property
    def boundary_margin(self):
        return self.radius - 1.0

    @property
    def degree(self):
        nz = np.nonzero(self._coeffs)[0]
        return int(nz[-1]) if nz.size else 0

    def coefficients(self):
        return self._coeffs.copy()

    def evaluate(self, z):
        za = np.asarray(z, dtype=complex)
        if np.any(np.abs(za) >= self.radius):
            raise DomainError('|z| >= %g, the radius of convergence'
                              % self.radius)
        out = np.zeros(za.shape, dtype=complex)
        for a in self._coeffs[::-1]:
            out = out * za + a
        return _scalar_out(z, out)

    def _pad(self, other):
        n = max(self._coeffs.size, other._coeffs.size)
        a = np.zeros(n, dtype=complex)
        b = np.zeros(n, dtype=complex)
        a[:self._coeffs.size] = self._coeffs
        b[:other._coeffs.size] = other._coeffs
        return a, b

    def __add__(self, other):
        if not isinstance(other, TaylorSeries):
            return NotImplemented
        a, b = self._pad(other)
        return TaylorSeries(a + b, min(self.radius, other.radius))

    def __sub__(self, other):
        if not isinstance(other, TaylorSeries):
            return NotImplemented
        return self + (-1.0) * other

    def __mul__(self, c):
        if not isinstance(c, numbers.Number):
            return NotImplemented
        return TaylorSeries(c * self._coeffs, self.radius)

    __rmul__ = __mul__

    def __neg__(self):
        return (-1.0) * self

    def rotated(self, theta):
        """Return z -> f(e^(i theta) z)."""
        n = np.arange(self._coeffs.size)
        return TaylorSeries(self._coeffs * np.exp(1j * theta * n),
                            self.radius)

    def spec(self):
        vals = []
        for a in self._coeffs[:self.degree + 1]:
            vals.append(repr(float(a.real)) if a.imag == 0 else repr(complex(a)))
        return 'taylor:[%s]' % ','.join(vals)


class RationalHalfPlane(HolomorphicFunction):
    """``sum b_j / (z + i c_j)**k_j`` with c_j > 0 and integer k_j >= 1."""

    __slots__ = ('terms',)

    geometry = Geometry.HALFPLANE

    def __init__(self, terms):
        checked = []
        for term in terms:
            try:
                b, c, k = term
            except (TypeError, ValueError):
                raise DomainError('rational terms are (b, c, k) triples, got '
                                  '%r' % (term,))
            c = float(c)
            if not c > 0:
                raise DomainError('rational term pole -%gi is not in the '
                                  'lower half-plane' % c)
            if int(k) != k or k < 1:
                raise DomainError('rational term order must be an integer '
                                  '>= 1, got %r' % (k,))
            checked.append((complex(b), c, int(k)))
        self.terms = tuple(checked)

    @property
    def boundary_margin(self):
        if not self.terms:
            return math.inf
        return min(c for _, c, _ in self.terms)

    def evaluate(self, z):
        za = np.asarray(z, dtype=complex)
        out = np.zeros(za.shape, dtype=complex)
        for b, c, k in self.terms:
            d = za + 1j * c
            if np.any(d == 0):
                raise DomainError('z = -%gi is a pole' % c)
            out = out + b / d ** k
        return _scalar_out(z, out)

    def __add__(self, other):
        if not isinstance(other, RationalHalfPlane):
            return NotImplemented
        return RationalHalfPlane(self.terms + other.terms)

    def __mul__(self, s):
        if not isinstance(s, numbers.Number):
            return NotImplemented
        return RationalHalfPlane([(s * b, c, k) for b, c, k in self.terms])

    __rmul__ = __mul__

    def translated(self, a):
        """Return z -> f(z + a) for real `a`."""
        return PointwiseFunction(lambda z: self.evaluate(z + a),
                                 Geometry.HALFPLANE, self.boundary_margin,
                                 '%s shifted by %g' % (self.spec(), a))

    def bound(self, z):
        """Majorant ``sum |b_j| / |Im z + c_j|**k_j`` of |f(z)|."""
        y = np.imag(np.asarray(z, dtype=complex))
        out = np.zeros(y.shape)
        for b, c, k in self.terms:
            out = out + abs(b) / np.abs(y + c) ** k
        return out

    def spec(self):
        return 'rational:[%s]' % ','.join(
            '(%r,%r,%d)' % (b.real if b.imag == 0 else b, c, k)
            for b, c, k in self.terms)


class PointwiseFunction(HolomorphicFunction):
    """A function known only through a vectorized callable."""

    __slots__ = ('_fn', 'geometry', 'boundary_margin', 'label')

    def __init__(self, fn, geometry=None, margin=0.0, label=None):
        self._fn = fn
        self.geometry = None if geometry is None else Geometry.coerce(geometry)
        self.boundary_margin = float(margin)
        self.label = label

    def evaluate(self, z):
        out = np.asarray(self._fn(np.asarray(z, dtype=complex)),
                         dtype=complex)
        return _scalar_out(z, out)

    def translated(self, a):
        return PointwiseFunction(lambda z: self._fn(z + a), self.geometry,
                                 self.boundary_margin,
                                 '%s shifted by %g' % (self.spec(), a))

    def spec(self):
        return self.label or 'pointwise'


def evaluate(f, z):
    """Evaluate `f` at `z` (scalar or array)."""
    if isinstance(f, HolomorphicFunction):
        return f.evaluate(z)
    out = np.asarray(f(np.asarray(z, dtype=complex)), dtype=complex)
    return _scalar_out(z, out)


def coefficients(f):
    """Return a copy of the Taylor coefficients of `f`.

    :Raises UnsupportedRepresentationError: unless `f` is a `TaylorSeries`.
    """
    if not isinstance(f, TaylorSeries):
        raise UnsupportedRepresentationError('coefficients',
                                             type(f).__name__)
    return f.coefficients()


def taylor(coeffs, radius=math.inf):
    return TaylorSeries(coeffs, radius)


def geometric(a, n=60):
    """Truncation of ``1/(1 - a z)``: coefficients a**k, k <= n."""
    a = complex(a)
    radius = math.inf if a == 0 else 1.0 / abs(a)
    return TaylorSeries(a ** np.arange(n + 1), radius)


def rational(terms):
    return RationalHalfPlane(terms)


def monomial(n):
    if int(n) != n or n < 0:
        raise DomainError('monomial degree must be a nonnegative integer')
    coeffs = np.zeros(int(n) + 1, dtype=complex)
    coeffs[-1] = 1.0
    return TaylorSeries(coeffs)


def exp_truncation(n=10, a=1.0):
    """Truncation of ``exp(a z)``: coefficients a**k/k!, k <= n."""
    k = np.arange(n + 1)
    logfact = np.cumsum(np.r_[0.0, np.log(np.arange(1, n + 1))])
    return TaylorSeries(complex(a) ** k * np.exp(-logfact))


def zero():
    return TaylorSeries([0.0])


def random_polynomial(rng, degree):
    """Polynomial of the given degree with coefficients uniform in the
    unit square, drawn from the numpy generator `rng`."""
    re = rng.uniform(-1.0, 1.0, degree + 1)
    im = rng.uniform(-1.0, 1.0, degree + 1)
    return TaylorSeries(re + 1j * im)


def random_rational(rng, max_terms=2):
    """Rational half-plane function with 1..`max_terms` terms, orders in
    {2, 3} and poles at -i c with c in [0.5, 2]."""
    count = int(rng.integers(1, max_terms + 1))
    terms = []
    for _ in range(count):
        b = complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
        c = float(rng.uniform(0.5, 2.0))
        k = int(rng.choice([2, 3]))
        terms.append((b, c, k))
    return RationalHalfPlane(terms)
