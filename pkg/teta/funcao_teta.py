"""
Módulo de Funções Teta com Características Racionais.

θ[ε, ε'](z, τ) = Σ_n q^{(n+ε/2)²/2} · e^{2πi(n+ε/2)(z+ε'/2)}

O jato em z vem da soma definidora: o coeficiente de z^k é
(2πi)^k/k! · Σ_n x^k q^{s·x²/2} e^{πixε'} com x = n + ε/2 e s a escala
em τ. O fator (2i)^k/k! entra no coeficiente e π^k no grau.

As constantes também podem ser obtidas pelo produto triplo de Jacobi,
usado como oráculo independente.

Funções:
    jato_teta: Jato [c_0..c_K] pela soma.
    constante_teta: θ[ε, ε'](0, sτ).
    teta_linha / teta_duas_linhas: θ' = 1!·c_1 e θ'' = 2!·c_2.
    produto_triplo: Constante pelo produto triplo.
    residuo_calor: Resíduo da equação do calor por ordem em z.
"""
import logging
from fractions import Fraction
from math import factorial, isqrt

from exato.ciclotomico import CorpoCiclotomico, fase_racional, unidade_imaginaria
from series.jato_z import JatoZ
from series.serie_pi import SeriePi
from teta.caracteristica import Caracteristica, EspecificacaoTeta

logger = logging.getLogger(__name__)


def _corpo(corpo):
    return corpo if corpo is not None else CorpoCiclotomico.padrao()


def _pontos_da_soma(eps: Fraction, escala: int, trunc: Fraction) -> list:
    """Valores x = n + ε/2 com escala·x²/2 < trunc."""
    if trunc <= 0:
        return []
    # |x| < sqrt(2·trunc/escala)
    raio = isqrt(int(2 * trunc / escala) + 1) + 1
    centro = int(eps / 2)
    pontos = []
    for n in range(-centro - raio - 1, -centro + raio + 2):
        x = n + eps / 2
        if escala * x * x / 2 < trunc:
            pontos.append(x)
    return pontos


def jato_teta(espec: EspecificacaoTeta, corpo: CorpoCiclotomico = None) -> JatoZ:
    """
    Constrói o jato de θ[ε, ε'](z, sτ) até z^K pela soma definidora.

    Args:
        espec (EspecificacaoTeta): Característica, escala, ordem K e truncamento.
        corpo (CorpoCiclotomico): Corpo dos coeficientes (padrão: Config).

    Returns:
        JatoZ: c_k com grau k em π e truncamento espec.trunc.

    Exemplos:
        >>> jato = jato_teta(EspecificacaoTeta(Caracteristica(1, 1), ordem_z=1, trunc=3))
        >>> jato.coeficiente(0).eh_nula()
        True
    """
    corpo = _corpo(corpo)
    car, s, ordem, trunc = espec.car, espec.escala_tau, espec.ordem_z, espec.trunc
    pontos = _pontos_da_soma(car.eps, s, trunc)
    # por expoente, soma das fases ponderadas por x^k
    por_expoente = [dict() for _ in range(ordem + 1)]
    for x in pontos:
        fase = fase_racional(x * car.eps_linha / 2, corpo)
        expoente = s * x * x / 2
        potencia = Fraction(1)
        for k in range(ordem + 1):
            if potencia:
                parcela = fase * potencia
                atual = por_expoente[k].get(expoente)
                por_expoente[k][expoente] = parcela if atual is None else atual + parcela
            potencia *= x
    i = unidade_imaginaria(corpo)
    coefs = []
    for k in range(ordem + 1):
        fator = (i ** k) * Fraction(2 ** k, factorial(k))
        termos = {e: c * fator for e, c in por_expoente[k].items() if c}
        coefs.append(SeriePi(termos, trunc, k, corpo))
    logger.debug("jato de θ%s em %dτ: %d pontos, ordem z %d", car, s, len(pontos), ordem)
    return JatoZ(coefs, 0)


def constante_teta(car: Caracteristica, escala_tau: int = 1, trunc=Fraction(50),
                   corpo: CorpoCiclotomico = None) -> SeriePi:
    """θ[ε, ε'](0, sτ) pela soma (grau 0)."""
    return jato_teta(EspecificacaoTeta(car, escala_tau, 0, trunc), corpo).coeficiente(0)


def teta_linha(car: Caracteristica, escala_tau: int = 1, trunc=Fraction(50),
               corpo: CorpoCiclotomico = None) -> SeriePi:
    """∂θ/∂z em z = 0 (grau 1)."""
    return jato_teta(EspecificacaoTeta(car, escala_tau, 1, trunc), corpo).coeficiente(1)


def teta_duas_linhas(car: Caracteristica, escala_tau: int = 1, trunc=Fraction(50),
                     corpo: CorpoCiclotomico = None) -> SeriePi:
    """∂²θ/∂z² em z = 0 (grau 2), igual a 2!·c_2."""
    return jato_teta(EspecificacaoTeta(car, escala_tau, 2, trunc), corpo).coeficiente(2) * 2


def _multiplicar_binomio(termos: dict, c, b: Fraction, limite: Fraction):
    """termos ← termos·(1 + c·q^b), descartando expoentes >= limite (b > 0)."""
    for e in sorted(termos, reverse=True):
        alvo = e + b
        if alvo >= limite:
            continue
        novo = termos.get(alvo)
        parcela = termos[e] * c
        soma = parcela if novo is None else novo + parcela
        if soma:
            termos[alvo] = soma
        else:
            termos.pop(alvo, None)


def produto_triplo(espec: EspecificacaoTeta, corpo: CorpoCiclotomico = None) -> JatoZ:
    """
    Constante teta pelo produto triplo de Jacobi.

    e^{πiεε'/2} x^{ε²/4} Π_{n>=1} (1 - x^{2n})(1 + e^{πiε'} x^{2n-1+ε})(1 + e^{-πiε'} x^{2n-1-ε}),
    com x = q^{s/2}.

    Fatores com expoente negativo são reescritos como c·x^a·(1 + c⁻¹x^{-a});
    um fator constante nulo anula a série.

    Args:
        espec (EspecificacaoTeta): Deve ter ordem_z = 0.

    Returns:
        JatoZ: Jato de ordem 0 com a constante.

    Raises:
        ValueError: Se espec.ordem_z != 0.
    """
    if espec.ordem_z != 0:
        raise ValueError("Produto triplo implementado apenas para constantes (ordem_z = 0)")
    corpo = _corpo(corpo)
    car, s, trunc = espec.car, espec.escala_tau, espec.trunc
    eps = car.eps
    fase_mais = fase_racional(car.eps_linha / 2, corpo)
    fase_menos = fase_racional(-car.eps_linha / 2, corpo)

    prefator = fase_racional(eps * car.eps_linha / 4, corpo)
    expoente_x = eps * eps / 4
    positivos = []  # (c, expoente em x) com expoente > 0
    # fatores de expoente <= 0 são finitos: 2n - 1 - |ε| <= 0
    n = 1
    while 2 * n - 1 - abs(eps) <= 0:
        for c, a in ((fase_mais, 2 * n - 1 + eps), (fase_menos, 2 * n - 1 - eps)):
            if a > 0:
                positivos.append((c, a))
            elif a == 0:
                prefator = prefator * (1 + c)
            else:
                prefator = prefator * c
                expoente_x += a
                positivos.append((c.inverso(), -a))
        positivos.append((-1, Fraction(2 * n)))
        n += 1
    if not prefator:
        return JatoZ([SeriePi.zero(trunc, 0, corpo)], 0)
    lider = s * expoente_x / 2
    limite = trunc - lider
    termos = {Fraction(0): corpo.um()}
    for c, a in positivos:
        b = s * Fraction(a) / 2
        if b < limite:
            _multiplicar_binomio(termos, corpo.elemento(c), b, limite)
    while True:
        fatores = ((-1, Fraction(2 * n)), (fase_mais, 2 * n - 1 + eps), (fase_menos, 2 * n - 1 - eps))
        menor = min(s * Fraction(a) / 2 for _, a in fatores)
        if menor >= limite:
            break
        for c, a in fatores:
            b = s * Fraction(a) / 2
            if b < limite:
                _multiplicar_binomio(termos, corpo.elemento(c), b, limite)
        n += 1
    serie = SeriePi({e + lider: c * prefator for e, c in termos.items()}, trunc, 0, corpo)
    return JatoZ([serie], 0)


def residuo_calor(car: Caracteristica, ordem_z: int, trunc=Fraction(50),
                  corpo: CorpoCiclotomico = None, fator_tempo: int = 8) -> JatoZ:
    """
    Resíduo de ∂²θ/∂z² - 4πi ∂θ/∂τ por ordem em z.

    Com ∂/∂τ = 2πi q d/dq, o coeficiente de z^k é
    (k+2)(k+1)c_{k+2} + 8π²·q dc_k/dq, de grau k + 2.

    Args:
        car (Caracteristica): Característica.
        ordem_z (int): K >= 2.
        fator_tempo (int): Coeficiente de π²·q d/dq (8 na equação do calor).

    Returns:
        JatoZ: Coeficientes k = 0..K-2 (grau base 2); nulo se a equação vale.

    Raises:
        ValueError: Se ordem_z < 2.
    """
    if ordem_z < 2:
        raise ValueError(f"Resíduo do calor exige ordem em z >= 2 (recebido {ordem_z})")
    jato = jato_teta(EspecificacaoTeta(car, 1, ordem_z, trunc), corpo)
    c = jato.coefs
    residuos = []
    for k in range(ordem_z - 1):
        residuos.append(c[k + 2] * ((k + 2) * (k + 1)) + c[k].q_ddq().vezes_pi(2) * fator_tempo)
    return JatoZ(residuos, 2)
