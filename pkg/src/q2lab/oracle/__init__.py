from .catalog import *
from .distribution import *
from .error import *
