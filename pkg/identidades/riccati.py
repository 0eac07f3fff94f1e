"""
Equações de Riccati para quocientes de funções teta.

Uma EspecificacaoRiccati descreve c·q dW/dq = g(q)·p(W), com W um
quociente de constantes teta (ou um quociente eta), g um produto de
Pochhammer e p um polinômio de grau <= 2 com coeficientes racionais.

Funções construtoras:
    w_nivel5, w_nivel6, w_nivel8, w_eta_nivel6: as funções W.
    g_nivel5, g_nivel6, g_nivel8, g_eta_nivel6: os coeficientes g(q).

Instâncias:
    RICCATI_NIVEL5, RICCATI_NIVEL6, RICCATI_NIVEL8, ODE_ETA_NIVEL6.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from exato.ciclotomico import raiz_quadrada_inteira
from series.serie_pi import SeriePi


def w_nivel5(f) -> SeriePi:
    """θ⁵[1,1/5] / θ⁵[1,3/5]."""
    return f.teta(1, "1/5") ** 5 / f.teta(1, "3/5") ** 5


def g_nivel5(f) -> SeriePi:
    """(q;q)⁵ / (q⁵;q⁵)."""
    return f.produto_q({1: 5, 5: -1})


def w_nivel6(f) -> SeriePi:
    """θ⁴[1,1/3] / θ⁴[1,2/3]."""
    return f.teta(1, "1/3") ** 4 / f.teta(1, "2/3") ** 4


def g_nivel6(f) -> SeriePi:
    """((q;q)²(q³;q³)² / ((q²;q²)(q⁶;q⁶)))²."""
    return f.produto_q({1: 2, 2: -1, 3: 2, 6: -1}) ** 2


def w_nivel8(f) -> SeriePi:
    """θ²[1,1/4] / θ²[1,3/4]."""
    return f.teta(1, "1/4") ** 2 / f.teta(1, "3/4") ** 2


def g_nivel8(f) -> SeriePi:
    """(q;q)²(q²;q²)(q⁴;q⁴)³ / (q⁸;q⁸)²."""
    return f.produto_q({1: 2, 2: 1, 4: 3, 8: -2})


def w_eta_nivel6(f) -> SeriePi:
    """{(q²;q²)(q³;q³)² / ((q;q)²(q⁶;q⁶))}⁴."""
    return f.produto_q({1: -2, 2: 1, 3: 2, 6: -1}) ** 4


def g_eta_nivel6(f) -> SeriePi:
    """(q²;q²)⁷(q³;q³)⁷ / ((q;q)⁵(q⁶;q⁶)⁵)."""
    return f.produto_q({1: -5, 2: 7, 3: 7, 6: -5})


@dataclass(frozen=True)
class EspecificacaoRiccati:
    """
    c·q dW/dq = g(q)·p(W).

    Attributes:
        nome (str): Nome da função W ('W5', 'W6', 'W8', 'W6eta').
        construir_w (Callable): fabrica -> SeriePi W.
        construir_g (Callable): fabrica -> SeriePi g.
        fator (tuple): c = a + b√radicando como (a, b).
        polinomio (tuple): Coeficientes de p, do grau 0 para cima.
        polinomio_perturbado (tuple): p usado na variante perturbada.
        raiz (tuple): W₀ = a + b√radicando esperado, como (a, b).
        radicando (int | None): 2, 3, 5 ou None.
        enunciado (str): Forma legível da equação.
        perturbacao (str): Descrição da variante perturbada.
    """
    nome: str
    construir_w: Callable
    construir_g: Callable
    fator: tuple
    polinomio: tuple
    polinomio_perturbado: tuple
    raiz: tuple
    radicando: Optional[int]
    enunciado: str
    perturbacao: str

    def _quadratico(self, corpo, par: tuple):
        a, b = par
        valor = corpo.elemento(Fraction(a))
        if b:
            valor = valor + raiz_quadrada_inteira(self.radicando, corpo) * Fraction(b)
        return valor

    def valor_fator(self, corpo):
        return self._quadratico(corpo, self.fator)

    def raiz_esperada(self, corpo):
        return self._quadratico(corpo, self.raiz)

    def descrever_raiz(self) -> str:
        a, b = self.raiz
        if not b:
            return str(a)
        return f"{a} + {b}√{self.radicando}"

    def avaliar_polinomio(self, x, perturbar: bool = False):
        """p(x) por Horner; x pode ser SeriePi ou elemento do corpo."""
        coefs = self.polinomio_perturbado if perturbar else self.polinomio
        resultado = coefs[-1]
        for c in reversed(coefs[:-1]):
            resultado = resultado * x + c
        return resultado

    def residuo(self, fabrica, perturbar: bool = False) -> SeriePi:
        """c·q dW/dq - g·p(W)."""
        w = self.construir_w(fabrica)
        g = self.construir_g(fabrica)
        fator = self.valor_fator(fabrica.corpo)
        return w.q_ddq() * fator - g * self.avaliar_polinomio(w, perturbar)


RICCATI_NIVEL5 = EspecificacaoRiccati(
    nome="W5",
    construir_w=w_nivel5,
    construir_g=g_nivel5,
    fator=(0, 5),
    polinomio=(-1, -11, 1),
    polinomio_perturbado=(-1, -10, 1),
    raiz=(Fraction(11, 2), Fraction(5, 2)),
    radicando=5,
    enunciado="q dW/dq = (1/√5³)·(q;q)⁵/(q⁵;q⁵)·(W² - 11W - 1), W = θ⁵[1,1/5]/θ⁵[1,3/5]",
    perturbacao="11 trocado por 10",
)

RICCATI_NIVEL6 = EspecificacaoRiccati(
    nome="W6",
    construir_w=w_nivel6,
    construir_g=g_nivel6,
    fator=(8, 0),
    polinomio=(9, -10, 1),
    polinomio_perturbado=(9, -9, 1),
    raiz=(9, 0),
    radicando=None,
    enunciado="q dW/dq = (1/8)·((q;q)²(q³;q³)²/((q²;q²)(q⁶;q⁶)))²·(W² - 10W + 9), W = θ⁴[1,1/3]/θ⁴[1,2/3]",
    perturbacao="10 trocado por 9",
)

RICCATI_NIVEL8 = EspecificacaoRiccati(
    nome="W8",
    construir_w=w_nivel8,
    construir_g=g_nivel8,
    fator=(0, 4),
    polinomio=(1, -6, 1),
    polinomio_perturbado=(1, -5, 1),
    raiz=(3, 2),
    radicando=2,
    enunciado="q dW/dq = (1/√2⁵)·(q;q)²(q²;q²)(q⁴;q⁴)³/(q⁸;q⁸)²·(W² - 6W + 1), W = θ²[1,1/4]/θ²[1,3/4]",
    perturbacao="6 trocado por 5",
)

ODE_ETA_NIVEL6 = EspecificacaoRiccati(
    nome="W6eta",
    construir_w=w_eta_nivel6,
    construir_g=g_eta_nivel6,
    fator=(1, 0),
    polinomio=(-1, 1),
    polinomio_perturbado=(-2, 1),
    raiz=(1, 0),
    radicando=None,
    enunciado="q dW/dq = (q²;q²)⁷(q³;q³)⁷/((q;q)⁵(q⁶;q⁶)⁵)·(W - 1), W = {(q²;q²)(q³;q³)²/((q;q)²(q⁶;q⁶))}⁴",
    perturbacao="W - 1 trocado por W - 2",
)

FUNCOES_W = {
    "W5": w_nivel5,
    "W6": w_nivel6,
    "W8": w_nivel8,
}
