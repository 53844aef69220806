from .error import *
from .good import *
from .integrals import *
from .joint import *
