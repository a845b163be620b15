"""Parsers for the weight and function grammars used by the CLI and the
harness configuration.

Weights::

    power:alpha=1.5[,cap=2,coef=1]    linear[:slope=0.5,cap=2]
    exp-simple    exp-decay:gamma=1,rho=2,mu=1
    exp-minus-one[:cap=3]    log-one-plus[:cap=3]
    volterra(W)    squash2(W)    squashx2(W)
    derived(p=2[,eps=0.5],base=W)    tabulated:path=weights.csv

Functions::

    taylor:[1, 0, 3j]    geom:a=0.5[,n=60]    monomial:n=3
    exp:n=10[,a=1]    rational:[(1, 1, 2), (0.5, 2, 3)]    zero
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('parse_weight', 'parse_function')
__docformat__ = 'restructuredtext'

import ast
import re

from holospaces import functions, weights
from holospaces.exceptions import HoloSpacesException, SpecSyntaxError

_NAME = re.compile(r'[a-z][a-z0-9-]*')
_KEY = re.compile(r'[a-z_][a-z0-9_]*')
_VALUE = re.compile(r'[^,()]+')

_WRAPPERS = ('volterra', 'squash2', 'squashx2')


class _Parser(object):
    __slots__ = ('text', 'pos', 'geometry')

    def __init__(self, text, geometry):
        self.text = text
        self.pos = 0
        self.geometry = geometry

    def fail(self, msg):
        raise SpecSyntaxError(self.text, self.pos, msg)

    def peek(self):
        return self.text[self.pos:self.pos + 1]

    def expect(self, ch):
        if self.peek() != ch:
            self.fail('expected %r' % ch)
        self.pos += 1

    def match(self, regex, what):
        m = regex.match(self.text, self.pos)
        if m is None:
            self.fail('expected %s' % what)
        self.pos = m.end()
        return m.group(0)

    def number(self, key, raw):
        try:
            return float(raw)
        except ValueError:
            self.fail('%s must be a number, got %r' % (key, raw))

    def params(self):
        out = {}
        while True:
            key = self.match(_KEY, 'parameter name')
            self.expect('=')
            out[key] = self.match(_VALUE, 'value for %s' % key).strip()
            if self.peek() != ',':
                return out
            self.pos += 1

    def parse(self):
        w = self.weight()
        if self.pos != len(self.text):
            self.fail('trailing text')
        return w

    def weight(self):
        name = self.match(_NAME, 'weight name')
        if name in _WRAPPERS:
            self.expect('(')
            base = self.weight()
            self.expect(')')
            if name == 'volterra':
                return weights.volterra_square(base)
            kind = (weights.SquashKind.SQUARE_ARG if name == 'squash2'
                    else weights.SquashKind.DOUBLE_ARG)
            return weights.squash(base, kind)
        if name == 'derived':
            return self.derived()
        params = {}
        if self.peek() == ':':
            self.pos += 1
            params = self.params()
        return self.leaf(name, params)

    def derived(self):
        self.expect('(')
        opts = {}
        while True:
            key = self.match(_KEY, 'parameter name')
            self.expect('=')
            if key == 'base':
                base = self.weight()
                break
            opts[key] = self.number(key, self.match(_VALUE, 'value'))
            self.expect(',')
        self.expect(')')
        if 'p' not in opts:
            self.fail('derived weights need p')
        unknown = set(opts) - set(('p', 'eps'))
        if unknown:
            self.fail('unknown derived parameters: %s'
                      % ', '.join(sorted(unknown)))
        return weights.derive_projection_weight(base, opts['p'],
                                                opts.get('eps'))

    def leaf(self, name, params):
        g = self.geometry
        if name == 'tabulated':
            if set(params) != set(('path',)):
                self.fail('tabulated weights take exactly path=...')
            return weights.load_tabulated(params['path'], g)
        nums = dict((k, self.number(k, v)) for k, v in params.items())
        if name == 'power':
            if 'alpha' not in nums:
                self.fail('power weights need alpha')
            extra = set(nums) - set(('alpha', 'cap', 'coef'))
            if extra:
                self.fail('unknown power parameters: %s'
                          % ', '.join(sorted(extra)))
            return weights.make_power_weight(g, nums['alpha'],
                                             nums.get('cap'),
                                             nums.get('coef', 1.0))
        if name == 'linear':
            extra = set(nums) - set(('slope', 'cap'))
            if extra:
                self.fail('unknown linear parameters: %s'
                          % ', '.join(sorted(extra)))
            return weights.make_linear_weight(g, nums.get('slope', 1.0),
                                              nums.get('cap'))
        try:
            tag = weights.NamedWeight.coerce(name)
        except HoloSpacesException:
            self.fail('unknown weight %r' % name)
        return weights.make_named_weight(g, tag, **nums)


def parse_weight(text, geometry):
    """Build the weight described by `text` on `geometry`.

    :Raises SpecSyntaxError: on grammar errors.
    :Raises DomainError, PreconditionError: when the described weight
        cannot be built.
    """
    geometry = weights.Geometry.coerce(geometry)
    return _Parser(''.join(str(text).split()), geometry).parse()


def _literal(text, body):
    try:
        return ast.literal_eval(body)
    except (ValueError, SyntaxError) as e:
        raise SpecSyntaxError(text, len(text) - len(body), str(e))


def parse_function(text):
    """Build the test function described by `text`."""
    text = str(text).strip()
    name, sep, body = text.partition(':')
    name = name.strip().lower()
    if name == 'zero' and not sep:
        return functions.zero()
    if name == 'taylor':
        coeffs = _literal(text, body)
        if not isinstance(coeffs, (list, tuple)):
            raise SpecSyntaxError(text, len(name) + 1, 'expected a list')
        return functions.taylor(coeffs)
    if name == 'rational':
        terms = _literal(text, body)
        if isinstance(terms, tuple) and len(terms) == 3 \
                and not isinstance(terms[0], tuple):
            terms = [terms]
        return functions.rational(terms)
    if name in ('geom', 'monomial', 'exp'):
        params = {}
        if body.strip():
            for item in body.split(','):
                key, eq, raw = item.partition('=')
                if not eq:
                    raise SpecSyntaxError(text, text.find(item),
                                          'expected key=value')
                try:
                    params[key.strip()] = complex(raw.strip().replace(
                        'i', 'j'))
                except ValueError:
                    raise SpecSyntaxError(text, text.find(item),
                                          'bad number %r' % raw)
        try:
            if name == 'geom':
                a = params.pop('a')
                n = params.pop('n', 60)
                out = functions.geometric(a, int(n.real))
            elif name == 'monomial':
                out = functions.monomial(int(params.pop('n').real))
            else:
                n = params.pop('n', 10)
                a = params.pop('a', 1.0)
                out = functions.exp_truncation(int(n.real), a)
        except KeyError as e:
            raise SpecSyntaxError(text, len(name), 'missing parameter %s' % e)
        if params:
            raise SpecSyntaxError(text, len(name), 'unknown parameters: %s'
                                  % ', '.join(sorted(params)))
        return out
    raise SpecSyntaxError(text, 0, 'unknown function %r' % name)
