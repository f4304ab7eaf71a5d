from .Exceptions import *
from .Orbital import *
from .Configuration import *
from .Dataset import *
