from .aritmetica import (
    FuncaoAritmetica,
    sigma,
    kron8,
    t4_count,
    soma_kron8,
    soma_kron8_complementar,
    coeficiente_eta_nivel8,
    coeficiente_eta13_nivel8,
)
from .produtos import pochhammer, QuocienteEta, serie_eta
from .eisenstein import eisenstein, EISENSTEIN
