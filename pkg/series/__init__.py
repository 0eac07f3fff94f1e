from .serie_pi import SeriePi, INF
from .jato_z import JatoZ
