###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

from .laurent import *
from .weyl_character import *
from .embeddings import *
from .frobenius import *
