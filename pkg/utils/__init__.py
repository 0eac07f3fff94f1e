from .conversor import Conversor