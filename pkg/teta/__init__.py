from .caracteristica import Caracteristica, EspecificacaoTeta
from .funcao_teta import (
    jato_teta,
    constante_teta,
    teta_linha,
    teta_duas_linhas,
    produto_triplo,
    residuo_calor,
)
