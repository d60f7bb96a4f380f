from .chart import *
from .forms import *
from .grid import *
from .patch import *
from .potential import *
from .projective import *
from .reports import *
