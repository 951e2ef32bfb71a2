#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#         ToricGB: Groebner Bases of Simplicial Toric Ideals
#   ---------------------------------------------------------------
#     [  Documentation: README.md and docs/ in the source tree    ]
#
# Copyright (C) 2021 The ToricGB Developers.
#

""" ToricGB setup.py

To install ToricGB:

    python setup.py install

To run the ToricGB unit tests:

    python setup.py test

The presets in toricgb.presets are run by the tests as well; the larger ones
(propB2-fig34, propB3-small, sturmfels-normal-spotcheck) only via the
`toricgb reproduce` command.
"""

# Standard Library Imports
import sys

from setuptools import setup


if sys.version_info < (3, 8):
    print('ToricGB requires at least Python 3.8 to run.')
    sys.exit(1)


def get_requires():
    # type: () -> List[str]
    """ Get Requires: Returns a list of required packages. """
    return [
        'Click',
        'numpy',
        'sympy>=1.12',
        'tqdm'
    ]

def get_extra_requires():
    # type: () -> Dict[str, List[str]]
    """ Get Extra Requires: Returns a list of extra/optional packages. """
    return {
        'test': ['pytest', 'hypothesis'],
    }


setup(
    name='toricgb',
    version='0.3.0',
    description="Groebner bases, reduction numbers and degree bounds of simplicial toric ideals.",
    long_description=open('package-info.rst').read(),
    author='The ToricGB Developers',
    license="BSD 3-Clause",
    keywords="commutative-algebra groebner-basis toric-ideal semigroup",
    install_requires=get_requires(),
    extras_require=get_extra_requires(),
    setup_requires=['pytest-runner'],
    tests_require=['pytest', 'hypothesis'],
    packages=['toricgb',
              'toricgb.cli',
              'toricgb.gb',
              'toricgb.predicates'],
    package_data={'': ['../LICENSE', '../package-info.rst']},
    entry_points={"console_scripts": ["toricgb=toricgb.__main__:main"]},
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
