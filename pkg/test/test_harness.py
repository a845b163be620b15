#!/usr/bin/env python3

"""Tests of the verification harness and the scenario registry."""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

import csv
import json
import os
import shutil
import sys
import tempfile
import unittest

top_srcdir = os.path.abspath(os.environ.get(
    'HOLOSPACES_TOP_SRCDIR', os.path.join(os.path.dirname(__file__),
                                          os.pardir)))
sys.path.insert(0, top_srcdir)

import holospaces
from holospaces import decorators, harness
from holospaces.exceptions import (ConfigError, DomainError, OpenProblemError,
                                   PreconditionError)
from holospaces.harness import VerificationReport, load_config, run_all

if not holospaces.__file__.startswith(top_srcdir):
    raise Exception("holospaces (%s) is not being picked up from the source "
                    "tree" % holospaces.__file__)


@decorators.scenario('echo-test', 'echo-{geometry}',
                     'echoes a value on the {geometry}')
def run_echo(geometry, weight, value=0.0, refuse=False):
    if refuse:
        raise OpenProblemError('echo refusal')
    if value < 0:
        raise DomainError('negative echo')
    return VerificationReport(None, 'echo-test', geometry, {'value': value},
                              {'value': 1.0})


def echo(sid, **options):
    entry = {'id': sid, 'kind': 'echo-test', 'geometry': 'disc',
             'weight': 'linear'}
    entry.update(options)
    return entry


class TestRegistry(unittest.TestCase):

    def test_builtin_kinds(self):
        kinds = set(decorators.registered())
        self.assertTrue(set(('isometry', 'projection', 'reconstruction',
                             'kernel-identity', 'representation',
                             'volterra-moments')) <= kinds)
        self.assertIs(decorators.lookup('isometry'), harness.run_isometry_p2)
        self.assertRaises(ConfigError, decorators.lookup, 'nothing')

    def test_markers(self):
        self.assertEqual(run_echo._holospaces_scenario_kind, 'echo-test')
        self.assertEqual(run_echo._holospaces_required,
                         ('geometry', 'weight'))

    def test_bad_kind(self):
        self.assertRaises(ValueError, decorators.scenario, 'Bad Kind', 'x',
                          'y')

    def test_needs_geometry(self):
        decorator = decorators.scenario('no-geometry', 'x', 'y')

        def runner(weight):
            pass

        self.assertRaises(TypeError, decorator, runner)

    def test_registered_once(self):
        decorator = decorators.scenario('echo-test', 'x', 'y')

        def other(geometry):
            pass

        self.assertRaises(ValueError, decorator, other)


class TestLoadConfig(unittest.TestCase):

    def test_default_config(self):
        seed, scenarios = load_config(harness.DEFAULT_CONFIG)
        self.assertEqual(seed, harness.DEFAULT_CONFIG['seed'])
        self.assertEqual(len(scenarios), 21)
        refusing = [s.id for s in scenarios if s.expect_refusal]
        self.assertEqual(refusing, ['representation-plane-p1'])
        p1 = [s for s in scenarios if s.id == 'projection-halfplane-p1'][0]
        self.assertEqual(p1.options, {'variant': 'double'})

    def test_sources(self):
        config = {'seed': 3, 'scenarios': [echo('a', value=0.5)]}
        seed, scenarios = load_config(json.dumps(config))
        self.assertEqual(seed, 3)
        self.assertEqual(scenarios[0].options, {'value': 0.5})
        tmp = tempfile.mkdtemp()
        try:
            path = os.path.join(tmp, 'config.json')
            with open(path, 'w') as f:
                json.dump(config, f)
            self.assertEqual(load_config(path)[1][0].id, 'a')
        finally:
            shutil.rmtree(tmp)

    def test_points(self):
        _, scenarios = load_config({'scenarios': [echo('a', points=[
            [0.5, 0.25], 0.1])]})
        self.assertEqual(scenarios[0].points, [0.5 + 0.25j, 0.1 + 0j])
        self.assertEqual(scenarios[0].as_dict()['points'],
                         [[0.5, 0.25], [0.1, 0.0]])

    def test_errors(self):
        bad = [
            [],
            '{"scenarios": ',
            {'seed': -1},
            {'seed': True},
            {'scenarios': {}},
            {'extra': 1},
            {'scenarios': [echo('a'), echo('a')]},
            {'scenarios': [echo('a', kind='nothing')]},
            {'scenarios': [echo('a', geometry='sphere')]},
            {'scenarios': [echo('a', colour='red')]},
            {'scenarios': [echo('a', p=0.5)]},
            {'scenarios': [echo('a', tol=0)]},
            {'scenarios': [echo('a', points=[[1, 2, 3]])]},
            {'scenarios': [echo('a', functions={'random': 'many'})]},
            {'scenarios': [echo('a', functions=[1, 2])]},
            {'scenarios': [echo('')]},
            {'scenarios': [{'id': 'a', 'kind': 'echo-test'}]},
        ]
        for config in bad:
            self.assertRaises(ConfigError, load_config, config)


class TestRunScenario(unittest.TestCase):

    def run_one(self, **options):
        _, scenarios = load_config({'scenarios': [echo('one', **options)]})
        return harness.run_scenario(scenarios[0], seed=1)

    def test_pass_and_fail(self):
        report = self.run_one(value=0.5)
        self.assertEqual(report.verdict, 'pass')
        self.assertTrue(report.passed)
        self.assertEqual(report.scenario_id, 'one')
        self.assertIsNotNone(report.wall_time)
        self.assertEqual(self.run_one(value=2.0).verdict, 'fail')
        self.assertEqual(self.run_one(value=float('nan')).verdict, 'fail')

    def test_refusals(self):
        report = self.run_one(refuse=True)
        self.assertEqual(report.verdict, 'refused')
        self.assertFalse(report.passed)
        self.assertEqual(report.references['claim'], 'echo-disc')
        self.assertEqual(self.run_one(refuse=True,
                                      expect_refusal=True).verdict, 'pass')
        report = self.run_one(value=0.5, expect_refusal=True)
        self.assertEqual(report.verdict, 'error')

    def test_errors_become_reports(self):
        report = self.run_one(value=-1.0)
        self.assertEqual(report.verdict, 'error')
        self.assertTrue(report.error.startswith('holospaces.Error.Domain'))

    def test_report_dict(self):
        report = self.run_one(value=0.5)
        self.assertNotIn('wall_time', report.as_dict())
        self.assertIn('wall_time', report.as_dict(timing=True))


class TestRunAll(unittest.TestCase):

    def setUp(self):
        self.dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.dir)

    def test_empty(self):
        self.assertEqual(run_all({'scenarios': []}), ([], 0))

    def test_config_errors(self):
        self.assertEqual(run_all({'seed': -1}), ([], 2))
        self.assertEqual(run_all({'scenarios': [echo('a')]},
                                 only=['b']), ([], 2))

    def test_status_and_files(self):
        config = {'seed': 5, 'scenarios': [echo('ok', value=0.5),
                                           echo('bad', value=3.0),
                                           echo('skip', value=9.0)]}
        reports, status = run_all(config, only=['ok', 'bad'],
                                  out_dir=self.dir, workers=2)
        self.assertEqual(status, 1)
        self.assertEqual([r.scenario_id for r in reports], ['ok', 'bad'])
        with open(os.path.join(self.dir, 'report.json')) as f:
            doc = json.load(f)
        self.assertEqual(doc['seed'], 5)
        self.assertFalse(doc['passed'])
        self.assertNotIn('wall_time', doc['scenarios'][0])
        with open(os.path.join(self.dir, 'summary.csv'), newline='') as f:
            rows = list(csv.reader(f))
        self.assertEqual(rows[0], ['id', 'kind', 'geometry', 'verdict',
                                   'quantity', 'value', 'threshold', 'claim'])
        self.assertEqual(rows[1][:5], ['ok', 'echo-test', 'disc', 'pass',
                                       'value'])
        with open(os.path.join(self.dir, 'timings.csv'), newline='') as f:
            self.assertEqual(len(list(csv.reader(f))), 3)
        _, status = run_all(config, only=['ok'])
        self.assertEqual(status, 0)

    def test_report_independent_of_workers(self):
        ids = ['kernel-identity-disc', 'reconstruction-disc']
        contents = []
        for workers in (1, 4):
            out = os.path.join(self.dir, 'w%d' % workers)
            _, status = run_all(None, only=ids, out_dir=out, workers=workers)
            self.assertEqual(status, 0)
            with open(os.path.join(out, 'report.json'), 'rb') as f:
                contents.append(f.read())
        self.assertEqual(contents[0], contents[1])

    def test_subset_does_not_change_report(self):
        alone, _ = run_all(None, only=['kernel-identity-disc'], workers=1)
        both, _ = run_all(None, only=['kernel-identity-disc',
                                      'reconstruction-disc'], workers=2)
        self.assertEqual(len(alone), 1)
        paired = [r for r in both if r.scenario_id == 'kernel-identity-disc']
        self.assertEqual(paired[0].as_dict(), alone[0].as_dict())

    def test_seed_override(self):
        reports, _ = run_all({'seed': 1, 'scenarios': [echo('a')]}, seed=9,
                             out_dir=self.dir)
        with open(os.path.join(self.dir, 'report.json')) as f:
            self.assertEqual(json.load(f)['seed'], 9)


class TestBuiltinScenarios(unittest.TestCase):

    def run_default(self, *ids):
        reports, _ = run_all(None, only=ids, workers=1)
        return dict((r.scenario_id, r) for r in reports)

    def test_plane_p1_representation_is_refused(self):
        report = self.run_default('representation-plane-p1')[
            'representation-plane-p1']
        self.assertEqual(report.verdict, 'pass')
        self.assertIn('refusal', report.info)
        report = harness.run_scenario(harness.VerificationScenario(
            'p1', 'representation', holospaces.Geometry.PLANE, 'exp-simple',
            p=1.0, functions=['taylor:[1, 0, 0.5]'], points=[0.5 + 0.5j]))
        self.assertEqual(report.verdict, 'refused')

    def test_disc_identities(self):
        reports = self.run_default('kernel-identity-disc',
                                   'reconstruction-disc')
        for report in reports.values():
            self.assertEqual(report.verdict, 'pass', report.as_dict())

    def test_volterra_moments(self):
        report = harness.run_volterra_identities('disc', 'linear', n_max=8)
        self.assertTrue(report.passed, report.as_dict())
        self.assertTrue(report.info['square'].startswith('volterra('))
        self.assertEqual(report.references['claim'],
                         'volterra-square-moments-disc')

    def test_disc_projection(self):
        # omega_1 = 1 - x**2 has Delta_1 = 2/3, and ||z||_{2,omega}**2 = 1/2
        report = harness.run_projection_bound(
            'disc', 'linear', functions=['taylor:[0, 1]', 'taylor:[1]'])
        self.assertTrue(report.passed, report.as_dict())
        self.assertAlmostEqual(report.measured['max_ratio'], 1.0, places=8)
        report = harness.run_projection_bound(
            'disc', 'linear', functions=['taylor:[0, 1]'])
        self.assertAlmostEqual(report.measured['max_ratio'],
                               (2.0 / 3.0) / 0.5 ** 0.5, places=8)

    def test_projection_variants(self):
        self.assertRaises(PreconditionError, harness.run_projection_bound,
                          'halfplane', 'linear:slope=0.5,cap=2',
                          functions=['rational:[(1, 1, 2)]'], p=2.0,
                          variant='double')
        self.assertRaises(DomainError, harness.run_projection_bound,
                          'halfplane', 'linear:cap=1',
                          functions=['rational:[(1, 1, 2)]'], variant='half')

    def test_kernel_identity_refuses_plane(self):
        self.assertRaises(DomainError, harness.run_kernel_identities,
                          'plane', 'exp-simple')


if __name__ == '__main__':
    unittest.main()
