from .checks import *
from .config import *
from .error import *
from .experiments import *
from .manifest import *
