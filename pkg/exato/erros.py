"""
Exceções do motor de q-séries.

Todas derivam de ValueError: uma violação de contrato (ordem do corpo,
grau em π, radicando, domínio) é sempre um valor inválido passado
a uma operação.
"""


class ErroOrdemCorpo(ValueError):
    """A raiz da unidade ou fase pedida não existe no corpo Q(ζ_M)."""


class ErroRadicando(ValueError):
    """Raiz quadrada pedida para um radicando sem imersão conhecida."""


class ErroDivisaoPorZero(ValueError, ZeroDivisionError):
    """Inversão do elemento nulo."""


class ErroGrau(ValueError):
    """Soma de séries com graus em π diferentes."""


class ErroTermoDominante(ValueError):
    """Série sem termo dominante invertível (nula até o truncamento)."""


class ErroDominio(ValueError):
    """Argumento fora do domínio de uma função aritmética."""


class ErroNomeSerie(ValueError):
    """Nome de série que não segue a gramática do comando expand."""
