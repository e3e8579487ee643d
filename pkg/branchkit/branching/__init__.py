###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

from .request import *
from .theorems import *
from .ktypes import *
