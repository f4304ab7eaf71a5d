from .Config import *
from .Levels import *
from .Energies import *
from .Fisheye import *
from .Gegenbauer import *
from .Scan import *
