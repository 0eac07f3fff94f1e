"""
Fábrica memorizada das séries usadas pelas verificações.

Várias verificações pedem as mesmas constantes teta, derivadas e
produtos; a fábrica constrói cada objeto uma vez por execução e pode
ser compartilhada entre threads.
"""
import logging
import threading
from fractions import Fraction

from config import Config
from eta.eisenstein import eisenstein
from eta.produtos import QuocienteEta, serie_eta
from exato.ciclotomico import CorpoCiclotomico
from series.serie_pi import SeriePi
from teta.caracteristica import Caracteristica, EspecificacaoTeta
from teta.funcao_teta import jato_teta, produto_triplo

logger = logging.getLogger(__name__)


class FabricaSeries:
    """
    Constrói e guarda séries truncadas em ordem_q + margem.

    Attributes:
        ordem_q (Fraction): Ordem em q verificada.
        ordem_z (int): Ordem K dos jatos.
        margem (Fraction): Ordem extra de construção.
        trunc (Fraction): Truncamento de construção (ordem_q + margem).
        corpo (CorpoCiclotomico): Corpo dos coeficientes.
    """

    def __init__(self, ordem_q=None, ordem_z: int = None, margem=None, corpo: CorpoCiclotomico = None):
        config = Config()
        self.ordem_q = Fraction(ordem_q if ordem_q is not None else config.ORDEM_Q)
        self.ordem_z = ordem_z if ordem_z is not None else config.ORDEM_Z
        self.margem = Fraction(margem if margem is not None else config.MARGEM_TRUNCAMENTO)
        self.trunc = self.ordem_q + self.margem
        self.corpo = corpo if corpo is not None else CorpoCiclotomico.padrao()
        self._cache = {}
        self._trava = threading.Lock()

    def _memorizar(self, chave, construir):
        with self._trava:
            valor = self._cache.get(chave)
        if valor is None:
            valor = construir()
            with self._trava:
                valor = self._cache.setdefault(chave, valor)
        return valor

    def ampliada(self, extra) -> "FabricaSeries":
        """Nova fábrica (cache vazio) com a margem aumentada em extra."""
        return FabricaSeries(self.ordem_q, self.ordem_z, self.margem + Fraction(extra), self.corpo)

    @staticmethod
    def car(eps, eps_linha) -> Caracteristica:
        return Caracteristica(Fraction(eps), Fraction(eps_linha))

    def jato(self, eps, eps_linha, escala: int = 1, ordem_z: int = None):
        """Jato de θ[ε, ε'](z, escala·τ) até z^K."""
        ordem = self.ordem_z if ordem_z is None else ordem_z
        car = self.car(eps, eps_linha)
        return self._memorizar(
            ("jato", car, escala, ordem),
            lambda: jato_teta(EspecificacaoTeta(car, escala, ordem, self.trunc), self.corpo))

    def teta(self, eps, eps_linha, escala: int = 1) -> SeriePi:
        """Constante θ[ε, ε'](0, escala·τ)."""
        return self.jato(eps, eps_linha, escala, 0).coeficiente(0)

    def linha(self, eps, eps_linha) -> SeriePi:
        """θ'[ε, ε'] (grau 1)."""
        return self.jato(eps, eps_linha, 1, 2).coeficiente(1)

    def duas_linhas(self, eps, eps_linha) -> SeriePi:
        """θ''[ε, ε'] = 2·c_2 (grau 2)."""
        return self._memorizar(
            ("duas_linhas", self.car(eps, eps_linha)),
            lambda: self.jato(eps, eps_linha, 1, 2).coeficiente(2) * 2)

    def produto_triplo(self, eps, eps_linha, escala: int = 1) -> SeriePi:
        car = self.car(eps, eps_linha)
        return self._memorizar(
            ("triplo", car, escala),
            lambda: produto_triplo(EspecificacaoTeta(car, escala, 0, self.trunc), self.corpo).coeficiente(0))

    def eta(self, fatores) -> SeriePi:
        """Quociente eta dado por dict {k: r} ou texto 'k^r,...'."""
        quociente = QuocienteEta.de_texto(fatores) if isinstance(fatores, str) else QuocienteEta.de_dict(fatores)
        return self._memorizar(("eta", quociente), lambda: serie_eta(quociente, self.trunc, self.corpo))

    def produto_q(self, fatores: dict) -> SeriePi:
        """Π_k (q^k; q^k)∞^{r_k} (o quociente eta sem a potência q^{Σkr/24})."""
        quociente = QuocienteEta.de_dict(fatores)
        lider = quociente.expoente_dominante()

        def construir():
            return serie_eta(quociente, self.trunc + lider, self.corpo).vezes_q(-lider)

        return self._memorizar(("produto_q", quociente), construir)

    def eisenstein(self, nome: str) -> SeriePi:
        return self._memorizar(("eisenstein", nome), lambda: eisenstein(nome, self.trunc, self.corpo))

    def constante(self, valor, grau: int = 0) -> SeriePi:
        """Escalar exato como série (truncamento infinito)."""
        return SeriePi.constante(valor, grau=grau, corpo=self.corpo)

    def __len__(self):
        return len(self._cache)
