from .Exceptions import *
from .Cooper import *
from .Richardson import *
from .Bcs import *
