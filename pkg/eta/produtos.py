"""
Módulo de Produtos de Pochhammer e Quocientes Eta.

(q^k; q^k)∞^r = Π_{n>=1} (1 - q^{kn})^r e η(kτ) = q^{k/24}(q^k; q^k)∞.

As expansões são feitas sobre listas de inteiros (os coeficientes são
inteiros para qualquer r) e convertidas em SeriePi apenas no fim.
As listas de (q; q)∞^r ficam memorizadas por (r, comprimento).

Classes:
    QuocienteEta: Π_k η(kτ)^{r_k}.

Funções:
    pochhammer: (q^k; q^k)∞^r truncado.
    serie_eta: Expansão de um quociente eta.
"""
import logging
import math
import re
import threading
from dataclasses import dataclass
from fractions import Fraction

from exato.ciclotomico import CorpoCiclotomico
from series.serie_pi import INF, SeriePi

logger = logging.getLogger(__name__)

_memoria = {}
_trava = threading.Lock()


def _comprimento(trunc, k: int = 1) -> int:
    """Quantidade de expoentes inteiros e >= 0 com k·e < trunc."""
    if trunc == INF:
        raise ValueError("Produtos infinitos exigem truncamento finito")
    if trunc <= 0:
        return 0
    return math.ceil(Fraction(trunc) / k)


def _lista_pochhammer(r: int, comprimento: int) -> tuple:
    """Coeficientes inteiros de (q; q)∞^r para expoentes 0..comprimento-1."""
    chave = (r, comprimento)
    with _trava:
        lista = _memoria.get(chave)
    if lista is not None:
        return lista
    p = [0] * comprimento
    if comprimento:
        p[0] = 1
    for n in range(1, comprimento):
        if r > 0:
            for _ in range(r):
                # multiplica por (1 - q^n)
                for e in range(comprimento - 1, n - 1, -1):
                    p[e] -= p[e - n]
        else:
            for _ in range(-r):
                # divide por (1 - q^n)
                for e in range(n, comprimento):
                    p[e] += p[e - n]
    lista = tuple(p)
    with _trava:
        _memoria[chave] = lista
    return lista


def _escalar_lista(lista: tuple, k: int, comprimento: int) -> list:
    escalada = [0] * comprimento
    for e, c in enumerate(lista):
        if e * k >= comprimento:
            break
        escalada[e * k] = c
    return escalada


def _produto_listas(a: list, b: list, comprimento: int) -> list:
    resultado = [0] * comprimento
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j in range(comprimento - i):
            cb = b[j]
            if cb:
                resultado[i + j] += ca * cb
    return resultado


def _para_serie(lista: list, trunc, deslocamento: Fraction, corpo) -> SeriePi:
    termos = {Fraction(e) + deslocamento: c for e, c in enumerate(lista) if c}
    return SeriePi(termos, trunc, 0, corpo)


def pochhammer(k: int, r: int, trunc, corpo: CorpoCiclotomico = None) -> SeriePi:
    """
    Expande (q^k; q^k)∞^r até q^trunc.

    Args:
        k (int): Escala, k >= 1.
        r (int): Expoente inteiro (negativo para o inverso).
        trunc: Truncamento finito.

    Returns:
        SeriePi: Série de grau 0 com coeficientes inteiros.

    Exemplos:
        >>> [pochhammer(1, -1, 7).coeficiente(n) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]
        True
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"Escala do produto deve ser inteiro positivo (recebido {k})")
    n = _comprimento(trunc, k)
    base = _lista_pochhammer(r, n)
    termos = {Fraction(e * k): c for e, c in enumerate(base) if c}
    return SeriePi(termos, trunc, 0, corpo)


@dataclass(frozen=True)
class QuocienteEta:
    """
    Quociente Π_k η(kτ)^{r_k}.

    Attributes:
        fatores (tuple): Pares (k, r_k) ordenados por k.

    Raises:
        ValueError: Escalas repetidas ou não positivas, ou expoente nulo.

    Exemplos:
        >>> QuocienteEta.de_texto("1^2,2,4^3,8^-2").expoente_dominante()
        Fraction(0, 1)
    """
    fatores: tuple

    def __post_init__(self):
        fatores = tuple(sorted((int(k), int(r)) for k, r in self.fatores))
        escalas = [k for k, _ in fatores]
        if len(set(escalas)) != len(escalas):
            raise ValueError(f"Escalas repetidas no quociente eta: {escalas}")
        for k, r in fatores:
            if k < 1:
                raise ValueError(f"Escala de η deve ser positiva (recebido {k})")
            if r == 0:
                raise ValueError(f"Expoente nulo para η({k}τ)")
        object.__setattr__(self, "fatores", fatores)

    @classmethod
    def de_dict(cls, expoentes: dict) -> "QuocienteEta":
        return cls(tuple(expoentes.items()))

    @classmethod
    def de_texto(cls, texto: str) -> "QuocienteEta":
        """Lê 'k^r,k^r,...' (r padrão 1, pode ser negativo)."""
        fatores = []
        for parte in texto.split(","):
            m = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(-?\d+))?\s*", parte)
            if not m:
                raise ValueError(f"Fator eta inválido: '{parte}' (esperado k ou k^r)")
            fatores.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(tuple(fatores))

    def expoente_dominante(self) -> Fraction:
        """Σ k·r_k / 24."""
        return Fraction(sum(k * r for k, r in self.fatores), 24)

    def __str__(self):
        return " ".join(f"η({k}τ)^{r}" if r != 1 else f"η({k}τ)" for k, r in self.fatores)


def serie_eta(quociente: QuocienteEta, trunc, corpo: CorpoCiclotomico = None) -> SeriePi:
    """
    Expande q^{Σkr/24}·Π_k (q^k; q^k)∞^{r_k} até q^trunc.

    Exemplos:
        >>> serie_eta(QuocienteEta(((1, 1),)), 2).termo_dominante()[0]
        Fraction(1, 24)
    """
    if trunc == INF:
        raise ValueError("Quocientes eta exigem truncamento finito")
    lider = quociente.expoente_dominante()
    comprimento = _comprimento(Fraction(trunc) - lider)
    produto = [1] + [0] * (comprimento - 1) if comprimento else []
    for k, r in quociente.fatores:
        fator = _escalar_lista(_lista_pochhammer(r, _comprimento(comprimento, k)), k, comprimento)
        produto = _produto_listas(produto, fator, comprimento)
    logger.debug("quociente eta %s expandido com %d coeficientes", quociente, comprimento)
    return _para_serie(produto, trunc, lider, corpo)
