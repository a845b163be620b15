"""holospaces exceptions."""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('HoloSpacesException', 'DomainError', 'PreconditionError',
           'ClassViolationError', 'AccuracyError', 'RadiusError',
           'UnsupportedRepresentationError', 'ConsistencyError',
           'OpenProblemError', 'SpecSyntaxError', 'ConfigError')
__docformat__ = 'restructuredtext'


class HoloSpacesException(Exception):

    include_traceback = False
    """If True, the command line front end prints a traceback along with
    the message.

    Leave it False on subclasses that describe an expected refusal (a point
    outside the certified radius, a violated hypothesis) and set it on
    subclasses that indicate a numerical or programming fault."""

    _error_name = 'holospaces.Error'

    def __init__(self, *args, **kwargs):
        name = kwargs.pop('name', None)
        if name is not None:
            self._error_name = name
        if kwargs:
            raise TypeError('HoloSpacesException does not take keyword '
                            'arguments: %s' % ', '.join(kwargs.keys()))
        Exception.__init__(self, *args)

    def __str__(self):
        s = Exception.__str__(self)
        if self._error_name is not None:
            return '%s: %s' % (self._error_name, s)
        else:
            return s

    def get_message(self):
        return Exception.__str__(self)

    def get_error_name(self):
        return self._error_name


class DomainError(HoloSpacesException, ValueError):

    _error_name = 'holospaces.Error.Domain'

    def __init__(self, condition):
        self.condition = condition
        HoloSpacesException.__init__(self, "Outside the admissible domain: %s"
                                     % condition)


class PreconditionError(HoloSpacesException):

    _error_name = 'holospaces.Error.Precondition'

    def __init__(self, hypothesis):
        self.hypothesis = hypothesis
        HoloSpacesException.__init__(self, "Hypothesis not satisfied: %s"
                                     % hypothesis)


class ClassViolationError(HoloSpacesException):

    _error_name = 'holospaces.Error.ClassViolation'

    def __init__(self, condition):
        self.condition = condition
        HoloSpacesException.__init__(self, "Weight leaves its class: %s"
                                     % condition)


class AccuracyError(HoloSpacesException):

    include_traceback = True
    _error_name = 'holospaces.Error.Accuracy'

    def __init__(self, what, achieved=None, target=None, value=None,
                 error=None):
        self.what = what
        self.achieved = achieved
        self.target = target
        # partial results, when the failing routine produced any
        self.value = value
        self.error = error
        if achieved is None:
            msg = what
        else:
            msg = "%s (achieved %.3g, target %.3g)" % (what, achieved, target)
        HoloSpacesException.__init__(self, msg)


class RadiusError(HoloSpacesException, ValueError):

    _error_name = 'holospaces.Error.Radius'

    def __init__(self, r_max, modulus=None):
        self.r_max = r_max
        self.modulus = modulus
        if modulus is None:
            msg = "radius above the refusal limit %g" % r_max
        else:
            msg = ("|z| = %.6g is outside the certified radius %g"
                   % (modulus, r_max))
        HoloSpacesException.__init__(self, msg)


class UnsupportedRepresentationError(HoloSpacesException):

    _error_name = 'holospaces.Error.UnsupportedRepresentation'

    def __init__(self, operation, variant):
        HoloSpacesException.__init__(self, "%s is not available for %s"
                                     % (operation, variant))


class ConsistencyError(HoloSpacesException):

    include_traceback = True
    _error_name = 'holospaces.Error.Consistency'

    def __init__(self, quantity, discrepancy):
        self.quantity = quantity
        self.discrepancy = discrepancy
        HoloSpacesException.__init__(self, "Cross-check failed for %s "
                                     "(discrepancy %.3g)"
                                     % (quantity, discrepancy))


class OpenProblemError(HoloSpacesException):

    _error_name = 'holospaces.Error.OpenProblem'

    def __init__(self, detail):
        HoloSpacesException.__init__(self, "Refused, this case is still an "
                                     "open problem: %s" % detail)


class SpecSyntaxError(HoloSpacesException, ValueError):

    _error_name = 'holospaces.Error.SpecSyntax'

    def __init__(self, text, pos, msg=''):
        self.text = text
        self.pos = pos
        HoloSpacesException.__init__(self, "Error parsing %r at offset %d: %s"
                                     % (text, pos, msg))


class ConfigError(HoloSpacesException):

    _error_name = 'holospaces.Error.Config'

    def __init__(self, msg=''):
        HoloSpacesException.__init__(self, "Invalid configuration: %s" % msg)
