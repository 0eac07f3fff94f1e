from .erros import *
from .inteiros import divisores, mmc
from .polinomios import polinomio_ciclotomico, dividir_polinomios, mdc_estendido
from .ciclotomico import (
    CorpoCiclotomico,
    ElementoCiclotomico,
    AcumuladorCiclotomico,
    raiz_da_unidade,
    fase_racional,
    unidade_imaginaria,
    raiz_quadrada_inteira,
)
