"""
Características das funções teta.

Classes:
    Caracteristica: Par [ε, ε'] de racionais.
    EspecificacaoTeta: Característica + escala em τ + ordem em z + truncamento.

Exemplos:
    >>> car = Caracteristica.de_texto("1,1/5")
    >>> car.deslocar(1, 0)
    Caracteristica(eps=Fraction(3, 1), eps_linha=Fraction(1, 5))
"""
from dataclasses import dataclass
from fractions import Fraction

from config import Config
from exato.ciclotomico import CorpoCiclotomico, ElementoCiclotomico, fase_racional
from exato.erros import ErroOrdemCorpo
from exato.inteiros import mmc


@dataclass(frozen=True)
class Caracteristica:
    """
    Característica [ε, ε'] de θ[ε, ε'](z, τ).

    As entradas não são reduzidas a um domínio fundamental: [1, 3/2] e
    [1, -1/2] são objetos distintos, ligados pela lei de deslocamento.

    Raises:
        ErroOrdemCorpo: Se as fases e^{πi(n+ε/2)ε'}, e^{πiεε'/2} e e^{πiε}
            não existirem no corpo da Config.
    """
    eps: Fraction
    eps_linha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eps", Fraction(self.eps))
        object.__setattr__(self, "eps_linha", Fraction(self.eps_linha))
        ordem = Config().ORDEM_CORPO
        necessaria = self.ordem_das_fases()
        if ordem % necessaria:
            raise ErroOrdemCorpo(
                f"Característica {self} exige ζ_{necessaria}, ausente em Q(ζ_{ordem})")

    @classmethod
    def de_texto(cls, texto: str) -> "Caracteristica":
        """Lê 'ε,ε'' com frações exatas ('1,1/5', '-1,3/2')."""
        partes = texto.split(",")
        if len(partes) != 2:
            raise ValueError(f"Característica inválida: '{texto}' (esperado 'ε,ε'')")
        return cls(Fraction(partes[0].strip()), Fraction(partes[1].strip()))

    def ordem_das_fases(self) -> int:
        """Menor ordem de raiz da unidade que contém todas as fases usadas."""
        e, el = self.eps, self.eps_linha
        return 2 * mmc(el.denominator, (e * el / 2).denominator, e.denominator)

    def deslocar(self, m: int, n: int) -> "Caracteristica":
        """[ε + 2m, ε' + 2n]."""
        return Caracteristica(self.eps + 2 * m, self.eps_linha + 2 * n)

    def fator_deslocamento(self, n: int, corpo: CorpoCiclotomico = None) -> ElementoCiclotomico:
        """e^{πiεn}: θ[ε+2m, ε'+2n](0) = e^{πiεn}·θ[ε, ε'](0)."""
        return fase_racional(self.eps * n / 2, corpo)

    def negar(self) -> "Caracteristica":
        """[-ε, -ε']."""
        return Caracteristica(-self.eps, -self.eps_linha)

    def __str__(self):
        return f"[{self.eps},{self.eps_linha}]"


@dataclass(frozen=True)
class EspecificacaoTeta:
    """
    Pedido de construção de θ[car](z, escala_tau·τ).

    Attributes:
        car (Caracteristica): Característica.
        escala_tau (int): k >= 1 (avaliação em kτ, q ↦ q^k).
        ordem_z (int): Ordem K do jato (0 para a constante).
        trunc (Fraction): Truncamento em q.
    """
    car: Caracteristica
    escala_tau: int = 1
    ordem_z: int = 0
    trunc: Fraction = Fraction(50)

    def __post_init__(self):
        if not isinstance(self.escala_tau, int) or self.escala_tau < 1:
            raise ValueError(f"Escala em τ deve ser inteiro positivo (recebido {self.escala_tau})")
        if self.ordem_z < 0:
            raise ValueError(f"Ordem em z deve ser >= 0 (recebido {self.ordem_z})")
        object.__setattr__(self, "trunc", Fraction(self.trunc))
