#!/usr/bin/env python

from setuptools import setup

setup(name="gravcatlab",
      version="0.1",
      description="Local quantum uncertainty and concurrence of two gravitational cats at thermal equilibrium.",
      author="Gravcatlab developers",
      license="GPLv3.0",
      packages=['gravcatlab',],
      install_requires=('numpy', 'pandas', 'scipy', 'matplotlib'),
      entry_points={
          'console_scripts': ['gravcatlab=gravcatlab.cli:main'],
      },
)
