from .Exceptions import *
from .Flags import *
from .Report import *
from .Verify import *
from .main import *
