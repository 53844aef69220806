from .counts import *
from .degree import *
from .error import *
from .records import *
from .scan import *
from .subcube import *
