"""
Módulo de Polinômios sobre Q.

Um polinômio é representado por uma lista de coeficientes em ordem
crescente de grau: [1, 0, -1, 0, 1] representa 1 - x² + x⁴. Zeros à
direita são removidos por normalizar().

Funções:
    polinomio_ciclotomico: Φ_m por divisões exatas sucessivas.
    dividir_polinomios: Divisão euclidiana exata.
    mdc_estendido: Algoritmo de Euclides estendido (coeficientes de Bézout).

Exemplos:
    >>> polinomio_ciclotomico(12)
    (1, 0, -1, 0, 1)
"""
from fractions import Fraction
from functools import lru_cache

from exato.inteiros import divisores


def normalizar(p: list) -> list:
    """Remove os coeficientes nulos de maior grau."""
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return list(p[:n])


def somar_polinomios(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    resultado = list(a)
    for i, c in enumerate(b):
        resultado[i] += c
    return normalizar(resultado)


def subtrair_polinomios(a: list, b: list) -> list:
    return somar_polinomios(a, [-c for c in b])


def multiplicar_polinomios(a: list, b: list) -> list:
    if not a or not b:
        return []
    resultado = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                resultado[i + j] += ca * cb
    return normalizar(resultado)


def dividir_polinomios(a: list, b: list) -> tuple:
    """
    Divisão euclidiana a = q·b + r com grau(r) < grau(b).

    Os coeficientes são tratados como Fraction; quando b é mônico e a
    tem coeficientes inteiros o quociente e o resto também são inteiros.

    Args:
        a (list): Dividendo.
        b (list): Divisor não nulo.

    Returns:
        tuple: (quociente, resto), ambos normalizados.

    Raises:
        ZeroDivisionError: Se b for o polinômio nulo.
    """
    b = normalizar(b)
    if not b:
        raise ZeroDivisionError("Divisão por polinômio nulo")
    resto = [Fraction(c) for c in normalizar(a)]
    gb = len(b) - 1
    lider = Fraction(b[-1])
    if len(resto) - 1 < gb:
        return [], _simplificar(resto)
    quociente = [Fraction(0)] * (len(resto) - gb)
    for k in range(len(resto) - 1, gb - 1, -1):
        c = resto[k]
        if not c:
            continue
        fator = c / lider
        quociente[k - gb] = fator
        for j, cb in enumerate(b):
            if cb:
                resto[k - gb + j] -= fator * cb
    return _simplificar(normalizar(quociente)), _simplificar(normalizar(resto[:gb]))


def _simplificar(p: list) -> list:
    # Fraction com denominador 1 volta a int
    return [int(c) if isinstance(c, Fraction) and c.denominator == 1 else c for c in p]


@lru_cache(maxsize=None)
def polinomio_ciclotomico(m: int) -> tuple:
    """
    Calcula o m-ésimo polinômio ciclotômico Φ_m.

    Usa Φ_m = (x^m - 1) / Π_{d|m, d<m} Φ_d, com divisões exatas por
    polinômios mônicos de coeficientes inteiros.

    Args:
        m (int): Ordem, m >= 1.

    Returns:
        tuple: Coeficientes inteiros de Φ_m em ordem crescente de grau.

    Raises:
        ValueError: Se m < 1.

    Exemplos:
        >>> polinomio_ciclotomico(4)
        (1, 0, 1)
        >>> polinomio_ciclotomico(8)
        (1, 0, 0, 0, 1)
    """
    if m < 1:
        raise ValueError(f"Ordem do polinômio ciclotômico deve ser >= 1 (recebido {m})")
    numerador = [-1] + [0] * (m - 1) + [1]
    for d in divisores(m):
        if d == m:
            continue
        numerador, resto = dividir_polinomios(numerador, list(polinomio_ciclotomico(d)))
        if resto:
            raise ArithmeticError(f"Divisão inexata ao calcular Φ_{m}")
    return tuple(int(c) for c in numerador)


def mdc_estendido(a: list, b: list) -> tuple:
    """
    Algoritmo de Euclides estendido sobre Q[x].

    Args:
        a (list): Primeiro polinômio.
        b (list): Segundo polinômio.

    Returns:
        tuple: (g, s, t) com s·a + t·b = g e g mônico
        (g = [] quando a = b = 0).

    Exemplos:
        >>> g, s, t = mdc_estendido([1, 1], [1, 0, 1])
        >>> g
        [1]
    """
    r0, r1 = normalizar(a), normalizar(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = dividir_polinomios(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, subtrair_polinomios(s0, multiplicar_polinomios(q, s1))
        t0, t1 = t1, subtrair_polinomios(t0, multiplicar_polinomios(q, t1))
    if not r0:
        return [], s0, t0
    lider = Fraction(r0[-1])
    escalar = lambda p: _simplificar([Fraction(c) / lider for c in p])
    return escalar(r0), escalar(s0), escalar(t0)
