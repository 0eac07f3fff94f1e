"""
Módulo de Funções Aritméticas.

Somas de divisores, o caractere (8/·), as somas torcidas que aparecem
nas expansões de nível 8 e a contagem exaustiva t₄(n) de representações
como soma de quatro números triangulares.

Cada função é uma instância de FuncaoAritmetica: valores inteiros
exatos, memorizados em uma tabela protegida por trava (leituras
concorrentes são seguras; escritas são serializadas).

Exemplos:
    >>> sigma(1, 6)
    12
    >>> kron8(3)
    -1
    >>> t4_count(5) == sigma(1, 11)
    True
"""
import threading
from math import isqrt

from exato.erros import ErroDominio
from exato.inteiros import divisores


class FuncaoAritmetica:
    """
    Função aritmética memorizada.

    Attributes:
        nome (str): Nome usado nas mensagens ('sigma', 'kron8', 't4').
        minimo (int): Menor argumento aceito.

    Raises:
        ErroDominio: Se o argumento principal for menor que minimo.
    """

    def __init__(self, nome: str, regra, minimo: int = 1):
        self.nome = nome
        self.minimo = minimo
        self._regra = regra
        self._tabela = {}
        self._trava = threading.Lock()

    def __call__(self, *args) -> int:
        n = args[-1]
        if n < self.minimo:
            raise ErroDominio(f"{self.nome}({', '.join(map(str, args))}): argumento deve ser >= {self.minimo}")
        with self._trava:
            valor = self._tabela.get(args)
        if valor is None:
            valor = self._regra(*args)
            with self._trava:
                self._tabela[args] = valor
        return valor

    def tabela(self, *prefixo, inicio: int, fim: int) -> list:
        """Valores para n = inicio..fim (inclusive)."""
        return [self(*prefixo, n) for n in range(inicio, fim + 1)]

    def limpar(self):
        with self._trava:
            self._tabela.clear()

    def __repr__(self):
        return f"FuncaoAritmetica({self.nome!r}, memorizados={len(self._tabela)})"


def _sigma(k: int, n: int) -> int:
    if k < 0:
        raise ErroDominio(f"sigma: expoente k deve ser >= 0 (recebido {k})")
    return sum(d ** k for d in divisores(n))


def _kron8(m: int) -> int:
    resto = m % 8
    if resto in (1, 7):
        return 1
    if resto in (3, 5):
        return -1
    return 0


def _t4(n: int) -> int:
    # pares (x, y) com T_x + T_y = m, para todo m <= n
    triangulares = [x * (x + 1) // 2 for x in range((isqrt(8 * n + 1) - 1) // 2 + 1)]
    pares = [0] * (n + 1)
    for a in triangulares:
        for b in triangulares:
            if a + b <= n:
                pares[a + b] += 1
    return sum(pares[m] * pares[n - m] for m in range(n + 1))


def _soma_kron8(n: int) -> int:
    return sum(d * kron8(d) for d in divisores(n))


def _soma_kron8_complementar(n: int) -> int:
    return sum((n // d) * kron8(d) for d in divisores(n))


sigma = FuncaoAritmetica("sigma", _sigma)
kron8 = FuncaoAritmetica("kron8", _kron8)
t4_count = FuncaoAritmetica("t4", _t4, minimo=0)

soma_kron8 = FuncaoAritmetica("soma_kron8", _soma_kron8)
"""Σ_{d|n} d·(8/d)."""

soma_kron8_complementar = FuncaoAritmetica("soma_kron8_complementar", _soma_kron8_complementar)
"""Σ_{d|n} (n/d)·(8/d)."""


def coeficiente_eta_nivel8(n: int) -> int:
    """Coeficiente de qⁿ (n >= 1) em η²(τ)η(2τ)η³(4τ)/η²(8τ): -2·Σ_{d|n} d(8/d)."""
    return -2 * soma_kron8(n)


def coeficiente_eta13_nivel8(n: int) -> int:
    """Coeficiente de qⁿ (n >= 1) em η¹³(4τ)/(η²(τ)η(2τ)η⁶(8τ))."""
    return -2 * (soma_kron8(n) - 2 * soma_kron8_complementar(n))


def limpar_memorias():
    """Esvazia as tabelas de todas as funções aritméticas."""
    for funcao in (sigma, kron8, t4_count, soma_kron8, soma_kron8_complementar):
        funcao.limpar()
