#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

DESCRIPTION = ("Simulation of social agents on a multi-armed bandit that\
 observe their neighbors with a given sociability")

LONG_DESCRIPTION = """
**socialbandits** simulates agents that share a stochastic multi-armed bandit\
 and observe the pulls of their network neighbors with a per-agent probability,\
 the sociability. It predicts the ranking of the agents from the network\
 alone and checks the prediction and the regret bounds against Monte Carlo runs.
"""

DEPENDENCIES = [# documentation stuff
                'sphinx',
                'sphinx_rtd_theme >= 0.1',
                # lineterminator keyword of DataFrame.to_csv
                'pandas >= 1.5',
                'numpy >= 1.17',
                'scipy',
                'networkx >= 2.5',
                'joblib >= 1.0',
]

EXTRAS = {'tests': ['pytest >= 6']}

CLASSIFIERS = [
    'Development Status :: 4 - Beta',
    'Natural Language :: English',
    'License :: OSI Approved :: BSD License',
    'Operating System :: OS Independent',
    'Intended Audience :: Science/Research',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering'
]

setup(
    name='socialbandits',
    version='0.1',
    description=DESCRIPTION,
    long_description=LONG_DESCRIPTION,
    install_requires=DEPENDENCIES,
    extras_require=EXTRAS,
    python_requires='>=3.8',
    packages=find_packages(exclude=['tests', 'tests.*']),
    entry_points={
        'console_scripts': [
            'socialbandits=socialbandits.cli.main:start'
        ],
    },
    classifiers=CLASSIFIERS
)
