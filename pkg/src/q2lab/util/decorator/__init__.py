from .benchmark import *
from .execution import *
