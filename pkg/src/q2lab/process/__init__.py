from .error import *
from .runner import *
from .sampler import *
from .saturation import *
from .state import *
