from .error import *
from .overlay import *
from .solver import *
from .system import *
