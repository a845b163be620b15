"""holospaces_check

Implements the setuptools 'check_holospaces' command.
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

import os
import subprocess
import sys

from setuptools import Command


class holospaces_check(Command):

    # Brief (40-50 characters) description of the command
    description = "Runs the test suites from the source tree"

    user_options = [('suite=', 's',
                     "Run only this suite, e.g. test_kernels"),
                    ]

    def initialize_options(self):
        self.suite = None

    def finalize_options(self):
        if self.suite is not None and not self.suite.startswith('test_'):
            self.suite = 'test_' + self.suite

    def run(self):
        top_srcdir = os.path.dirname(os.path.dirname(
            os.path.abspath(__file__)))
        env = dict(os.environ, HOLOSPACES_TOP_SRCDIR=top_srcdir,
                   PYTHON=sys.executable)
        if self.suite:
            env['HOLOSPACES_TEST_SUITES'] = self.suite
        cmd = [os.path.join(top_srcdir, 'test', 'run-test.sh')]
        print(' '.join(cmd))
        status = subprocess.call(cmd, env=env)
        if status:
            sys.exit(status)
