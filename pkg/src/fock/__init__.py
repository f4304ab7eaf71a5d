from .Space import *
from .Model import *
from .Hamiltonian import *
from .Bogoliubov import *
