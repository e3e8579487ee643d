###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import setuptools
from setuptools import setup

NAME = 'branchkit'
VERSION = open('version.txt', 'r').read().strip()
URL = 'https://github.com/branchkit/branchkit'
DESCRIPTION = 'Branching laws of small unitary representations of GL(n,C), with exact character-level checks'
LONG_DESCRIPTION = None
AUTHOR = 'Branchkit Authors'
KEYWORDS = 'representation theory, branching laws, Weyl character formula, spherical harmonics'
REQUIRES_PYTHON = '>=3.8'
REQUIRED = [
    'numpy',
    'sympy',
]
EXTRAS = {
    'test': ['pytest'],
}

try:
    LONG_DESCRIPTION = open('README.md', 'r').read()
except IOError:
    LONG_DESCRIPTION = DESCRIPTION

setup(
    name=NAME,
    version=VERSION,
    url=URL,
    description=DESCRIPTION,
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    author=AUTHOR,
    license="MIT",
    keywords=KEYWORDS,
    python_requires=REQUIRES_PYTHON,
    packages=setuptools.find_packages(exclude=['tests', 'examples', 'examples.*']),
    include_package_data=True,
    install_requires=REQUIRED,
    extras_require=EXTRAS,
    entry_points={
        'console_scripts': ['branchkit=branchkit.cli:main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10'
    ]
)
