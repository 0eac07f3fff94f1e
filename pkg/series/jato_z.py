"""
Módulo de Jatos em z.

Um JatoZ guarda os coeficientes de Taylor c_0..c_K de uma função de
(z, τ) como SeriePi. O coeficiente c_k tem grau k + grau_base em π:
para funções teta grau_base = 0 e c_k carrega (2πi)^k, com o i dentro
do corpo e o π^k no grau.

Classes:
    JatoZ: Jato truncado em z^{K+1}.
"""
from fractions import Fraction

from exato.ciclotomico import ElementoCiclotomico
from exato.erros import ErroGrau
from series.serie_pi import INF, SeriePi


class JatoZ:
    """
    Jato [c_0, ..., c_K] de SeriePi.

    Attributes:
        coefs (tuple): Coeficientes c_k (SeriePi).
        grau_base (int): Grau em π de c_0; c_k tem grau k + grau_base.

    Raises:
        ErroGrau: Se algum c_k não nulo tiver grau diferente de k + grau_base.
    """
    __slots__ = ("coefs", "grau_base")

    def __init__(self, coefs, grau_base: int = 0):
        coefs = tuple(coefs)
        if not coefs:
            raise ValueError("Jato precisa de pelo menos o coeficiente c_0")
        for k, c in enumerate(coefs):
            if not c.eh_nula() and c.grau != k + grau_base:
                raise ErroGrau(f"Coeficiente c_{k} do jato com grau {c.grau}, esperado {k + grau_base}")
        self.coefs = coefs
        self.grau_base = grau_base

    @classmethod
    def constante(cls, serie: SeriePi, ordem_z: int) -> "JatoZ":
        """Jato de uma função que não depende de z (c_k = 0 para k >= 1)."""
        zeros = [SeriePi.zero(serie.trunc, serie.grau + k, serie.corpo) for k in range(1, ordem_z + 1)]
        return cls([serie] + zeros, serie.grau)

    @property
    def ordem_z(self) -> int:
        return len(self.coefs) - 1

    def coeficiente(self, k: int) -> SeriePi:
        return self.coefs[k]

    def _mesma_ordem(self, outro: "JatoZ"):
        if self.ordem_z != outro.ordem_z:
            raise ValueError(f"Jatos de ordens diferentes em z ({self.ordem_z} e {outro.ordem_z})")

    def __add__(self, outro):
        if not isinstance(outro, JatoZ):
            return NotImplemented
        self._mesma_ordem(outro)
        return JatoZ([a + b for a, b in zip(self.coefs, outro.coefs)], self._base_soma(outro))

    def __sub__(self, outro):
        if not isinstance(outro, JatoZ):
            return NotImplemented
        self._mesma_ordem(outro)
        return JatoZ([a - b for a, b in zip(self.coefs, outro.coefs)], self._base_soma(outro))

    def _base_soma(self, outro: "JatoZ") -> int:
        if self.eh_nulo():
            return outro.grau_base
        if not outro.eh_nulo() and outro.grau_base != self.grau_base:
            raise ErroGrau(f"Soma de jatos com graus base {self.grau_base} e {outro.grau_base}")
        return self.grau_base

    def __neg__(self):
        return JatoZ([-c for c in self.coefs], self.grau_base)

    def __mul__(self, outro):
        if isinstance(outro, (int, Fraction, ElementoCiclotomico)):
            return JatoZ([c * outro for c in self.coefs], self.grau_base)
        if isinstance(outro, SeriePi):
            return JatoZ([c * outro for c in self.coefs], self.grau_base + outro.grau)
        if not isinstance(outro, JatoZ):
            return NotImplemented
        self._mesma_ordem(outro)
        resultado = []
        for k in range(self.ordem_z + 1):
            soma = None
            for i in range(k + 1):
                a, b = self.coefs[i], outro.coefs[k - i]
                if a.eh_nula() and a.trunc == INF or b.eh_nula() and b.trunc == INF:
                    continue
                parcela = a * b
                soma = parcela if soma is None else soma + parcela
            if soma is None:
                soma = SeriePi.zero(INF, k + self.grau_base + outro.grau_base, self.coefs[0].corpo)
            resultado.append(soma)
        return JatoZ(resultado, self.grau_base + outro.grau_base)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 1:
            return NotImplemented
        resultado = self
        for _ in range(n - 1):
            resultado = resultado * self
        return resultado

    def truncar(self, trunc) -> "JatoZ":
        return JatoZ([c.truncar(trunc) for c in self.coefs], self.grau_base)

    def eh_nulo(self) -> bool:
        return all(c.eh_nula() for c in self.coefs)

    def verificar_nulidade(self) -> tuple:
        """
        Testa se todos os coeficientes são nulos.

        Returns:
            tuple: (True, None) ou (False, (k, expoente, coeficiente)) com o
            menor k e, dentro dele, o menor expoente não nulo.
        """
        for k, c in enumerate(self.coefs):
            nula, testemunha = c.verificar_nulidade()
            if not nula:
                return False, (k,) + testemunha
        return True, None

    def __repr__(self):
        return f"JatoZ(ordem_z={self.ordem_z}, grau_base={self.grau_base})"
