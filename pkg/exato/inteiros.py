"""
Utilitários inteiros: divisores e mmc.
"""
from functools import lru_cache, reduce
from math import gcd, isqrt


@lru_cache(maxsize=4096)
def divisores(n: int) -> tuple:
    """
    Lista os divisores positivos de n em ordem crescente (divisão por tentativa).

    Args:
        n (int): Inteiro positivo.

    Returns:
        tuple: Divisores d de n, 1 <= d <= n.

    Exemplos:
        >>> divisores(12)
        (1, 2, 3, 4, 6, 12)
    """
    pequenos = []
    grandes = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            pequenos.append(d)
            if d * d != n:
                grandes.append(n // d)
    return tuple(pequenos + grandes[::-1])


def mmc(*valores: int) -> int:
    """Mínimo múltiplo comum de inteiros positivos (1 para lista vazia)."""
    return reduce(lambda a, b: a * b // gcd(a, b), valores, 1)

