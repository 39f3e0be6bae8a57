#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
dissolve (district dissolution solvers)
"""

from setuptools import setup

from __version__ import version as pversion


def read_requirements():
    with open('./requirements/requirements.txt') as fp:
        requirements = [line.strip() for line in fp \
                        if line.strip() and not line.startswith(('#', '-r'))]
    return requirements


s_ = setup(
    name='dissolve',
    version=pversion,
    packages=['dissolve',
              'dissolve.model',
              'dissolve.flow',
              'dissolve.solvers',
              'dissolve.cli',
              'dissolve.tools',
              'dissolve.tools.generators',
              'dissolve.tools.plottools'],
    entry_points={
        'console_scripts': ['dissolve=dissolve.cli.main:run'],
    },
    include_package_data=True,
    classifiers=['Development Status :: 3 - Alpha',
                 'Programming Language :: Python :: 3.8'],
    install_requires=read_requirements(),
)
