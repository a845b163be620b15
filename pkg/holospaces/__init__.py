"""\
Weighted spaces of holomorphic functions on the unit disc, the complex
plane and the upper half-plane.

A weight (`holospaces.weights`) determines its moments or Laplace symbol
(`holospaces.moments`), its kernel (`holospaces.kernels`) and the operator
``L`` (`holospaces.operators`); `holospaces.norms` computes area and Hardy
norms and `holospaces.harness` checks the identities between them
numerically. Weights and functions can also be written as grammar text,
see `parse_weight` and `parse_function`.
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = (
           # from weights
           'Geometry', 'NamedWeight', 'SquashKind', 'WeightFunction',
           'make_power_weight', 'make_linear_weight', 'make_named_weight',
           'volterra_square', 'derive_projection_weight', 'squash',
           'validate_class', 'load_tabulated',

           # from functions
           'TaylorSeries', 'RationalHalfPlane', 'PointwiseFunction',
           'taylor', 'rational', 'monomial', 'geometric', 'zero',

           # from moments and kernels
           'disc_moments', 'plane_moments', 'laplace_symbol', 'make_kernel',
           'KernelMode',

           # from operators
           'OperatorContext', 'apply_L', 'invert_L', 'reconstruct_boundary',
           'area_reproduce', 'real_part_reproduce',

           # from norms
           'QuadratureSpec', 'NormResult', 'area_norm', 'hardy_norm',

           # grammar
           'parse_weight', 'parse_function',

           # from exceptions
           'HoloSpacesException', 'DomainError', 'PreconditionError',
           'ClassViolationError', 'AccuracyError', 'RadiusError',
           'UnsupportedRepresentationError', 'ConsistencyError',
           'OpenProblemError', 'SpecSyntaxError', 'ConfigError',

           # submodules
           'harness', 'quadrature',
           )
__docformat__ = 'restructuredtext'

try:
    from holospaces._version import version, __version__
except ImportError:
    pass

from holospaces.exceptions import (
    HoloSpacesException, DomainError, PreconditionError, ClassViolationError,
    AccuracyError, RadiusError, UnsupportedRepresentationError,
    ConsistencyError, OpenProblemError, SpecSyntaxError, ConfigError)
from holospaces.weights import (
    Geometry, NamedWeight, SquashKind, WeightFunction, make_power_weight,
    make_linear_weight, make_named_weight, volterra_square,
    derive_projection_weight, squash, validate_class, load_tabulated)
from holospaces.functions import (
    TaylorSeries, RationalHalfPlane, PointwiseFunction, taylor, rational,
    monomial, geometric, zero)
from holospaces.moments import disc_moments, plane_moments, laplace_symbol
from holospaces.kernels import KernelMode, make_kernel
from holospaces.operators import (
    OperatorContext, apply_L, invert_L, reconstruct_boundary, area_reproduce,
    real_part_reproduce)
from holospaces.norms import QuadratureSpec, NormResult, area_norm, hardy_norm
from holospaces._spec_parser import parse_weight, parse_function

import holospaces.quadrature as quadrature
import holospaces.harness as harness
