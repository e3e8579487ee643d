###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

"""

Branchkit: branching laws of small representations of GL(n,C) and their
finite verification through compact characters.

"""

import os

from .oops import *
from .lattice import *
from .characters import *
from .harmonics import *
from .spectrum import *
from .branching import *
from .verification import *

_VERSION_FILE = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'version.txt')

__version__ = open(_VERSION_FILE, 'r').read().strip() if os.path.exists(_VERSION_FILE) else '0.1.0'
__author__ = 'Branchkit Authors'
