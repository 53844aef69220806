from .edges import *
from .error import *
from .squares import *
from .subcubes import *
