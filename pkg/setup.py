"""Setup script for holospaces.

holospaces computes in weighted spaces of holomorphic functions on the unit
disc, the complex plane and the upper half-plane: moments and kernels of
radial weights, the operator L and its inverse, the boundary and area
integral representations, area and Hardy norms, and a harness that checks
the isometry, projection and reconstruction claims numerically.

Running ``python setup.py check_holospaces`` runs the test suites from the
source tree; ``python setup.py sdist`` builds a source distribution.
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

VERSION_FILE = 'holospaces/_version.py'

import os
import re
import sys

# First, get the version from the version module without importing the
# package (numpy may not be installed yet)
regex_version = r"__version__ = '([0-9\.]+)'"
with open(VERSION_FILE) as f:
    version_search = re.search(regex_version, f.read())

if version_search is None:
    sys.stderr.write("Can't find version pattern %r in %s file.\n"
                     % (regex_version, VERSION_FILE))
    sys.exit(1)
version = version_search.groups()[0]

from setuptools import setup

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)),
                                'test'))
from holospaces_check import holospaces_check

setup(
    name='holospaces',
    version=version,
    description='Weighted spaces of holomorphic functions: kernels, '
                'operators, norms and a verification harness',
    long_description=__doc__,
    license='MIT',
    python_requires='>=3.8',
    install_requires=['setuptools', 'numpy>=1.20', 'scipy>=1.6',
                      'mpmath>=1.1'],
    packages=['holospaces'],
    entry_points={
        'console_scripts': ['holospaces = holospaces.cli:main'],
    },
    cmdclass={'check_holospaces': holospaces_check},
    zip_safe=False,
)
