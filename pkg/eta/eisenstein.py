"""
Séries de Eisenstein E₂, E₄ e E₆ a partir de somas de divisores.

    E₂ = 1 - 24 Σ σ₁(n) qⁿ
    E₄ = 1 + 240 Σ σ₃(n) qⁿ
    E₆ = 1 - 504 Σ σ₅(n) qⁿ
"""
import math
from fractions import Fraction

from eta.aritmetica import sigma
from exato.ciclotomico import CorpoCiclotomico
from exato.erros import ErroNomeSerie
from series.serie_pi import INF, SeriePi

# nome -> (constante, expoente do divisor)
EISENSTEIN = {
    "E2": (-24, 1),
    "E4": (240, 3),
    "E6": (-504, 5),
}


def eisenstein(nome: str, trunc, corpo: CorpoCiclotomico = None) -> SeriePi:
    """
    Expande E₂, E₄ ou E₆ até q^trunc (grau 0, coeficientes inteiros).

    Raises:
        ErroNomeSerie: Se nome não for 'E2', 'E4' ou 'E6'.

    Exemplos:
        >>> e4 = eisenstein("E4", 3)
        >>> e4.coeficiente(2) == 2160
        True
    """
    if nome not in EISENSTEIN:
        raise ErroNomeSerie(f"Série de Eisenstein desconhecida: '{nome}' (use E2, E4 ou E6)")
    if trunc == INF:
        raise ValueError("Séries de Eisenstein exigem truncamento finito")
    constante, k = EISENSTEIN[nome]
    termos = {Fraction(0): 1}
    for n in range(1, math.ceil(Fraction(trunc))):
        termos[Fraction(n)] = constante * sigma(k, n)
    return SeriePi(termos, trunc, 0, corpo)
