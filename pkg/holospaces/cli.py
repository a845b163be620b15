"""Command line front end: ``holospaces <command> ...``.

Commands print CSV or JSON on standard output. Exit status is 0 on
success, 1 when a computation is refused or fails (the message goes to
standard error) and 2 for usage and configuration errors; ``verify``
exits 1 when some scenario does not pass.
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('main', 'build_parser')
__docformat__ = 'restructuredtext'

import argparse
import csv
import json
import logging
import sys
import traceback

import numpy as np

from holospaces import _config
from holospaces._spec_parser import parse_function, parse_weight
from holospaces._version import __version__
from holospaces.exceptions import ConfigError, HoloSpacesException
from holospaces.harness import run_all
from holospaces.kernels import make_kernel
from holospaces.moments import disc_moments, plane_moments
from holospaces.norms import QuadratureSpec, area_norm, hardy_norm
from holospaces.operators import (OperatorContext, apply_L, area_reproduce,
                                  reconstruct_boundary)
from holospaces.weights import Geometry

_logger = logging.getLogger('holospaces.cli')


def _point(text):
    try:
        re_part, _, im_part = text.partition(',')
        return complex(float(re_part), float(im_part or 0.0))
    except ValueError:
        raise argparse.ArgumentTypeError('expected re,im, got %r' % text)


def _geometry(text):
    try:
        return Geometry.coerce(text)
    except HoloSpacesException as e:
        raise argparse.ArgumentTypeError(e.get_message())


def _add_common(sub, function=True):
    sub.add_argument('--geometry', type=_geometry, default=Geometry.DISC,
                     help='disc, plane or halfplane (default: disc)')
    sub.add_argument('--weight', required=True,
                     help='weight grammar text, e.g. power:alpha=1')
    if function:
        sub.add_argument('--function', required=True,
                         help='function grammar text, e.g. taylor:[0,1]')
    sub.add_argument('--tol', type=float, default=None,
                     help='quadrature tolerance (default: %g)'
                     % _config.DEFAULTS['tol'])


def build_parser():
    parser = argparse.ArgumentParser(
        prog='holospaces',
        description='Weighted spaces of holomorphic functions on the disc, '
                    'the plane and the upper half-plane.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='more logging (repeat for debug output)')
    parser.add_argument('-q', '--quiet', action='store_true',
                        help='log errors only')
    parser.add_argument('--set', action='append', default=[],
                        metavar='NAME=VALUE',
                        help='override a numerical default, e.g. '
                             'tol=1e-8 (repeatable)')
    subs = parser.add_subparsers(dest='command', metavar='command')
    subs.required = True

    sub = subs.add_parser('moments', help='moment sequence Delta_0..Delta_N')
    sub.add_argument('--geometry', type=_geometry, default=Geometry.DISC,
                     help='disc or plane (default: disc)')
    sub.add_argument('--weight', required=True)
    sub.add_argument('--n', type=int, required=True, help='largest index N')
    sub.add_argument('--out', choices=('csv', 'json'), default='csv')
    sub.set_defaults(run=_cmd_moments)

    sub = subs.add_parser('kernel', help='evaluate the kernel of a weight')
    _add_common(sub, function=False)
    sub.add_argument('--at', type=_point, action='append', default=[],
                     help='evaluation point re,im (repeatable)')
    sub.add_argument('--grid', help='CSV file of points with columns re, im')
    sub.add_argument('--mode', default='auto',
                     choices=('auto', 'series', 'quadrature', 'closed-form'))
    sub.add_argument('--r-max', type=float, default=None,
                     help='certified disc radius')
    sub.add_argument('--out', choices=('csv', 'json'), default='csv')
    sub.set_defaults(run=_cmd_kernel)

    for name, helptext, run in (
            ('apply-l', 'evaluate L f', _cmd_apply_l),
            ('reconstruct', 'recover f from the boundary values of L f',
             _cmd_reconstruct),
            ('reproduce', 'integrate f against the kernel over the domain',
             _cmd_reproduce)):
        sub = subs.add_parser(name, help=helptext)
        _add_common(sub)
        sub.add_argument('--at', type=_point, action='append', default=[],
                         required=True, help='point re,im (repeatable)')
        if name == 'reproduce':
            sub.add_argument('--p', type=float, default=2.0,
                             help='exponent of the space (default: 2)')
        sub.set_defaults(run=run)

    sub = subs.add_parser('norm', help='area or Hardy norm of a function')
    sub.add_argument('--space', choices=('ap', 'hp'), required=True)
    sub.add_argument('--geometry', type=_geometry, default=Geometry.DISC)
    sub.add_argument('--weight', help='weight grammar text (--space ap)')
    sub.add_argument('--function', required=True)
    sub.add_argument('--p', type=float, default=2.0)
    sub.add_argument('--tol', type=float, default=None)
    sub.add_argument('--x-truncation', choices=('map', 'majorant'),
                     default='map')
    sub.add_argument('--out', choices=('json',), default='json')
    sub.set_defaults(run=_cmd_norm)

    sub = subs.add_parser('verify', help='run the verification scenarios')
    sub.add_argument('--config', help='JSON configuration (default: the '
                     'built-in scenario set)')
    sub.add_argument('--scenario', action='append', default=None,
                     help='run only this scenario id (repeatable)')
    sub.add_argument('--seed', type=int, default=None)
    sub.add_argument('--out', default=None,
                     help='directory for report.json and the CSV files')
    sub.add_argument('--workers', type=int, default=None)
    sub.set_defaults(run=_cmd_verify)
    return parser


def _write_csv(header, rows):
    writer = csv.writer(sys.stdout)
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)


def _write_json(doc):
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write('\n')


def _cmd_moments(args):
    w = parse_weight(args.weight, args.geometry)
    if args.geometry is Geometry.DISC:
        moments = disc_moments(w, args.n)
    elif args.geometry is Geometry.PLANE:
        moments = plane_moments(w, args.n)
    else:
        raise ConfigError('moments are defined on the disc and the plane; '
                          'use the Laplace symbol on the half-plane')
    rows = list(moments.as_rows())
    if args.out == 'csv':
        _write_csv(('n', 'delta_n', 'est_rel_err'),
                   [(n, repr(v), repr(e)) for n, v, e in rows])
    else:
        _write_json({'weight': w.spec(), 'method': moments.method,
                     'moments': [{'n': n, 'delta_n': v, 'est_rel_err': e}
                                 for n, v, e in rows]})
    return 0


def _read_grid(path):
    points = []
    first = True
    with open(path, newline='') as f:
        for row in csv.reader(f):
            if not row or row[0].strip().startswith('#'):
                continue
            try:
                points.append(complex(float(row[0]), float(row[1])))
            except (ValueError, IndexError):
                # only the first row may be a header
                if not first:
                    raise ConfigError('%s: malformed row %r' % (path, row))
            first = False
    return points


def _cmd_kernel(args):
    w = parse_weight(args.weight, args.geometry)
    points = list(args.at)
    if args.grid:
        points.extend(_read_grid(args.grid))
    if not points:
        raise ConfigError('give evaluation points with --at or --grid')
    k = make_kernel(w, args.mode, args.tol, args.r_max)
    zs = np.array(points, dtype=complex)
    values = np.atleast_1d(k.evaluate(zs))
    errors = np.atleast_1d(k.estimate_error(zs))
    if args.out == 'csv':
        _write_csv(('re', 'im', 'c_re', 'c_im', 'est_err'),
                   [(repr(float(z.real)), repr(float(z.imag)),
                     repr(float(v.real)), repr(float(v.imag)),
                     repr(float(e))) for z, v, e in zip(zs, values, errors)])
    else:
        _write_json({'weight': w.spec(), 'mode': k.mode.value,
                     'values': [_record(z, v, e)
                                for z, v, e in zip(zs, values, errors)]})
    return 0


def _record(z, value, err=None):
    return {'z': [z.real, z.imag], 'value': [value.real, value.imag],
            'est_err': None if err is None else float(err)}


def _context(args, p=None):
    w = parse_weight(args.weight, args.geometry)
    return OperatorContext(w, tol=args.tol, p=p)


def _cmd_apply_l(args):
    ctx = _context(args)
    g = apply_L(ctx, parse_function(args.function))
    zs = np.array(args.at, dtype=complex)
    values = np.atleast_1d(g.evaluate(zs))
    _write_json([_record(z, v, ctx.tol) for z, v in zip(zs, values)])
    return 0


def _cmd_reconstruct(args):
    ctx = _context(args)
    phi = apply_L(ctx, parse_function(args.function))
    zs = np.array(args.at, dtype=complex)
    values = np.atleast_1d(reconstruct_boundary(ctx, phi, zs))
    _write_json([_record(z, v, ctx.tol) for z, v in zip(zs, values)])
    return 0


def _cmd_reproduce(args):
    ctx = _context(args, args.p)
    zs = np.array(args.at, dtype=complex)
    values = np.atleast_1d(area_reproduce(ctx, parse_function(args.function),
                                          zs))
    _write_json([_record(z, v, ctx.tol) for z, v in zip(zs, values)])
    return 0


def _cmd_norm(args):
    f = parse_function(args.function)
    spec = QuadratureSpec(tol=args.tol, x_truncation=args.x_truncation)
    if args.space == 'ap':
        if not args.weight:
            raise ConfigError('area norms need --weight')
        result = area_norm(parse_weight(args.weight, args.geometry), args.p,
                           f, spec)
    else:
        result = hardy_norm(args.geometry, args.p, f, spec)
    _write_json(result.as_dict())
    return 0


def _cmd_verify(args):
    reports, status = run_all(args.config, args.seed, args.scenario,
                              args.out, args.workers)
    if status == 2:
        return 2
    _write_csv(('id', 'verdict'), [(r.scenario_id, r.verdict)
                                   for r in reports])
    failed = [r.scenario_id for r in reports if not r.passed]
    if failed:
        _logger.warning('%d of %d scenarios did not pass: %s', len(failed),
                        len(reports), ', '.join(failed))
    else:
        _logger.info('all %d scenarios passed', len(reports))
    return status


def _setup_logging(args):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    _setup_logging(args)
    try:
        for item in args.set:
            name, sep, value = item.partition('=')
            if not sep:
                raise ConfigError('--set takes NAME=VALUE, got %r' % item)
            _config.override(name.strip(), value.strip())
        return args.run(args)
    except ConfigError as e:
        sys.stderr.write('%s\n' % e)
        return 2
    except HoloSpacesException as e:
        if e.include_traceback:
            traceback.print_exc()
        sys.stderr.write('%s\n' % e)
        return 1
    except OSError as e:
        sys.stderr.write('holospaces: %s\n' % e)
        return 2


if __name__ == '__main__':
    sys.exit(main())
