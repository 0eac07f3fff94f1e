"""
Módulo de Aritmética Exata no Corpo Ciclotômico Q(ζ_M).

Todo coeficiente de série do motor vive em um único corpo ciclotômico
Q(ζ_M), M = 240 por padrão: é a menor ordem que contém as fases das
características com denominadores 2, 3, 4 e 5 e as constantes i, √2,
√3 e √5.

Representação:
    Um elemento é um polinômio em ζ_M de grau < φ(M), reduzido módulo
    Φ_M a cada operação, guardado como dicionário esparso
    {potência: numerador inteiro} e um denominador comum positivo,
    sempre em termos mínimos. A forma é canônica: dois elementos são
    iguais se e somente se as representações coincidem.

Classes:
    CorpoCiclotomico: Corpo Q(ζ_M) com a tabela de redução de x^p mod Φ_M.
    ElementoCiclotomico: Elemento imutável do corpo.
    AcumuladorCiclotomico: Soma de produtos com uma única redução final.

Funções:
    raiz_da_unidade: ζ_m^k imerso em Q(ζ_M).
    fase_racional: exp(2πi·r) para r racional.
    unidade_imaginaria: i = ζ_4.
    raiz_quadrada_inteira: √2, √3, √5 como elementos do corpo.

Exemplos:
    >>> corpo = CorpoCiclotomico.de_ordem(240)
    >>> raiz_da_unidade(4, 2, corpo) == -1
    True
    >>> r2 = raiz_quadrada_inteira(2, corpo)
    >>> r2 * r2 == 2
    True
"""
import logging
import threading
from fractions import Fraction
from math import gcd

import numpy as np

from config import Config
from exato.erros import ErroDivisaoPorZero, ErroOrdemCorpo, ErroRadicando
from exato.inteiros import mmc
from exato.polinomios import mdc_estendido, polinomio_ciclotomico

logger = logging.getLogger(__name__)

TOLERANCIA_IMERSAO = 1e-9


class CorpoCiclotomico:
    """
    Corpo ciclotômico Q(ζ_M) com tabela de redução pré-calculada.

    Attributes:
        ordem (int): M.
        grau (int): φ(M), dimensão sobre Q.
        polinomio (tuple): Coeficientes de Φ_M.

    Notas:
        - Instâncias são compartilhadas por ordem (de_ordem) e imutáveis
        - A tabela guarda x^p mod Φ_M para p < max(M, 2φ - 1), o que
          cobre produtos brutos de dois elementos reduzidos e todas as
          potências ζ_M^k com 0 <= k < M
    """
    _instancias = {}
    _trava = threading.Lock()

    def __init__(self, ordem: int):
        if ordem < 1:
            raise ErroOrdemCorpo(f"Ordem do corpo deve ser positiva (recebido {ordem})")
        self.ordem = ordem
        self.polinomio = polinomio_ciclotomico(ordem)
        self.grau = len(self.polinomio) - 1
        self._reducao = self._gerar_tabela()
        self._inversos = {}
        self._trava_inversos = threading.Lock()
        self._verificar_imersao()

    @classmethod
    def de_ordem(cls, ordem: int) -> "CorpoCiclotomico":
        """Devolve o corpo compartilhado de ordem M (criado uma única vez)."""
        with cls._trava:
            corpo = cls._instancias.get(ordem)
            if corpo is None:
                corpo = cls(ordem)
                cls._instancias[ordem] = corpo
                logger.debug("Corpo Q(ζ_%d) criado (grau %d)", ordem, corpo.grau)
            return corpo

    @classmethod
    def padrao(cls) -> "CorpoCiclotomico":
        """Corpo da ordem configurada em Config().ORDEM_CORPO."""
        return cls.de_ordem(Config().ORDEM_CORPO)

    def _gerar_tabela(self) -> list:
        """Gera x^p mod Φ_M para p < max(M, 2φ - 1)."""
        phi = self.grau
        cauda = [-c for c in self.polinomio[:phi]]  # x^φ = -Σ Φ_i x^i
        limite = max(self.ordem, 2 * phi - 1)
        tabela = []
        atual = {0: 1}
        for p in range(limite):
            if p < phi:
                atual = {p: 1}
            else:
                deslocado = {}
                for pot, c in atual.items():
                    if pot + 1 < phi:
                        deslocado[pot + 1] = deslocado.get(pot + 1, 0) + c
                    else:
                        for i, ci in enumerate(cauda):
                            if ci:
                                deslocado[i] = deslocado.get(i, 0) + c * ci
                atual = {pot: c for pot, c in deslocado.items() if c}
            tabela.append(atual)
        return tabela

    def _verificar_imersao(self):
        # Φ_M(e^{2πi/M}) deve anular-se numericamente
        zeta = np.exp(2j * np.pi / self.ordem)
        valor = np.polyval(np.array(self.polinomio[::-1], dtype=float), zeta)
        if abs(valor) > TOLERANCIA_IMERSAO * max(1.0, float(np.abs(self.polinomio).sum())):
            raise ArithmeticError(f"Imersão numérica de ζ_{self.ordem} falhou (|Φ(ζ)| = {abs(valor):.3e})")

    def reduzir(self, bruto: dict) -> dict:
        """
        Reduz um polinômio bruto {potência: inteiro} módulo Φ_M.

        Args:
            bruto (dict): Potências >= 0; potências >= M são tomadas mod M.

        Returns:
            dict: Representação reduzida, sem coeficientes nulos.
        """
        phi = self.grau
        resultado = {}
        tabela = self._reducao
        for pot, c in bruto.items():
            if not c:
                continue
            if pot < phi:
                resultado[pot] = resultado.get(pot, 0) + c
                continue
            if pot >= len(tabela):
                pot %= self.ordem
            for p, cp in tabela[pot].items():
                resultado[p] = resultado.get(p, 0) + c * cp
        return {p: c for p, c in resultado.items() if c}

    def elemento(self, valor) -> "ElementoCiclotomico":
        """Converte int, Fraction ou elemento deste corpo em ElementoCiclotomico."""
        if isinstance(valor, ElementoCiclotomico):
            if valor.corpo.ordem != self.ordem:
                raise ErroOrdemCorpo(
                    f"Elemento de Q(ζ_{valor.corpo.ordem}) usado em Q(ζ_{self.ordem})")
            return valor
        if isinstance(valor, (int, Fraction)):
            valor = Fraction(valor)
            return ElementoCiclotomico(self, {0: valor.numerator}, valor.denominator)
        raise TypeError(f"Não é possível converter {type(valor).__name__} para Q(ζ_{self.ordem})")

    def zero(self) -> "ElementoCiclotomico":
        return ElementoCiclotomico(self, {}, 1)

    def um(self) -> "ElementoCiclotomico":
        return ElementoCiclotomico(self, {0: 1}, 1)

    def zeta(self, k: int) -> "ElementoCiclotomico":
        """ζ_M^k reduzido (k qualquer inteiro)."""
        return ElementoCiclotomico(self, dict(self._reducao[k % self.ordem]), 1, _normalizado=True)

    def __repr__(self):
        return f"CorpoCiclotomico(ordem={self.ordem})"


def _produto_bruto(a: dict, b: dict) -> dict:
    """Convolução dos numeradores, sem redução."""
    if len(a) == 1 and 0 in a:
        c = a[0]
        return {p: c * v for p, v in b.items()}
    if len(b) == 1 and 0 in b:
        c = b[0]
        return {p: c * v for p, v in a.items()}
    bruto = {}
    for pa, ca in a.items():
        for pb, cb in b.items():
            chave = pa + pb
            bruto[chave] = bruto.get(chave, 0) + ca * cb
    return bruto


class ElementoCiclotomico:
    """
    Elemento imutável de Q(ζ_M).

    Attributes:
        corpo (CorpoCiclotomico): Corpo ao qual pertence.

    Notas:
        - Operações aceitam int e Fraction como escalares
        - Igualdade com int/Fraction compara com o elemento racional
        - inverso() usa Euclides estendido do representante com Φ_M
    """
    __slots__ = ("corpo", "_nums", "_den")

    def __init__(self, corpo: CorpoCiclotomico, nums: dict, den: int = 1, _normalizado: bool = False):
        self.corpo = corpo
        if _normalizado:
            self._nums = nums
            self._den = den
            return
        nums = {p: c for p, c in nums.items() if c}
        if not nums:
            self._nums, self._den = {}, 1
            return
        if den < 0:
            nums = {p: -c for p, c in nums.items()}
            den = -den
        g = den
        for c in nums.values():
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            nums = {p: c // g for p, c in nums.items()}
            den //= g
        self._nums = nums
        self._den = den

    # ------------------------------------------------------------------
    # consultas
    # ------------------------------------------------------------------
    def eh_zero(self) -> bool:
        return not self._nums

    def __bool__(self):
        return bool(self._nums)

    def eh_racional(self) -> bool:
        """True se o elemento pertence a Q (apenas a potência 0)."""
        return not self._nums or (len(self._nums) == 1 and 0 in self._nums)

    def valor_racional(self) -> Fraction:
        """
        Valor racional do elemento.

        Raises:
            ValueError: Se o elemento não for racional.
        """
        if not self.eh_racional():
            raise ValueError("Elemento não é racional")
        return Fraction(self._nums.get(0, 0), self._den)

    def termos(self) -> list:
        """Pares (potência, coeficiente racional) não nulos em ordem crescente."""
        return [(p, Fraction(self._nums[p], self._den)) for p in sorted(self._nums)]

    def avaliar(self) -> complex:
        """Valor complexo aproximado na imersão ζ_M = exp(2πi/M)."""
        if not self._nums:
            return 0j
        potencias = np.array(sorted(self._nums), dtype=float)
        numeradores = np.array([float(self._nums[int(p)]) for p in potencias])
        valores = np.exp(2j * np.pi * potencias / self.corpo.ordem)
        return complex(np.dot(numeradores, valores) / self._den)

    # ------------------------------------------------------------------
    # aritmética
    # ------------------------------------------------------------------
    def _coagir(self, outro):
        if isinstance(outro, ElementoCiclotomico):
            if outro.corpo is not self.corpo and outro.corpo.ordem != self.corpo.ordem:
                raise ErroOrdemCorpo(
                    f"Operação entre Q(ζ_{self.corpo.ordem}) e Q(ζ_{outro.corpo.ordem})")
            return outro
        if isinstance(outro, (int, Fraction)):
            return self.corpo.elemento(outro)
        return NotImplemented

    def __add__(self, outro):
        outro = self._coagir(outro)
        if outro is NotImplemented:
            return outro
        if not outro._nums:
            return self
        if not self._nums:
            return outro
        da, db = self._den, outro._den
        if da == db:
            nums = dict(self._nums)
            for p, c in outro._nums.items():
                nums[p] = nums.get(p, 0) + c
            return ElementoCiclotomico(self.corpo, nums, da)
        nums = {p: c * db for p, c in self._nums.items()}
        for p, c in outro._nums.items():
            nums[p] = nums.get(p, 0) + c * da
        return ElementoCiclotomico(self.corpo, nums, da * db)

    __radd__ = __add__

    def __neg__(self):
        return ElementoCiclotomico(self.corpo, {p: -c for p, c in self._nums.items()}, self._den, _normalizado=True)

    def __sub__(self, outro):
        outro = self._coagir(outro)
        if outro is NotImplemented:
            return outro
        return self + (-outro)

    def __rsub__(self, outro):
        outro = self._coagir(outro)
        if outro is NotImplemented:
            return outro
        return outro + (-self)

    def __mul__(self, outro):
        outro = self._coagir(outro)
        if outro is NotImplemented:
            return outro
        if not self._nums or not outro._nums:
            return self.corpo.zero()
        bruto = _produto_bruto(self._nums, outro._nums)
        if self.eh_racional() or outro.eh_racional():
            return ElementoCiclotomico(self.corpo, bruto, self._den * outro._den)
        return ElementoCiclotomico(self.corpo, self.corpo.reduzir(bruto), self._den * outro._den)

    __rmul__ = __mul__

    def inverso(self) -> "ElementoCiclotomico":
        """
        Inverso multiplicativo.

        Raises:
            ErroDivisaoPorZero: Se o elemento for nulo.
        """
        if not self._nums:
            raise ErroDivisaoPorZero("Inverso do elemento nulo em Q(ζ_M)")
        if self.eh_racional():
            valor = 1 / self.valor_racional()
            return self.corpo.elemento(valor)
        chave = (self._den, frozenset(self._nums.items()))
        with self.corpo._trava_inversos:
            inverso = self.corpo._inversos.get(chave)
        if inverso is not None:
            return inverso
        representante = [0] * (max(self._nums) + 1)
        for p, c in self._nums.items():
            representante[p] = c
        g, s, _ = mdc_estendido(representante, list(self.corpo.polinomio))
        if g != [1]:
            raise ArithmeticError("Representante não é coprimo com Φ_M")
        coefs = [Fraction(c) for c in s]
        den = mmc(*(c.denominator for c in coefs))
        nums = {p: int(c * den) * self._den for p, c in enumerate(coefs) if c}
        inverso = ElementoCiclotomico(self.corpo, nums, den)
        with self.corpo._trava_inversos:
            self.corpo._inversos[chave] = inverso
        return inverso

    def __truediv__(self, outro):
        outro = self._coagir(outro)
        if outro is NotImplemented:
            return outro
        return self * outro.inverso()

    def __rtruediv__(self, outro):
        outro = self._coagir(outro)
        if outro is NotImplemented:
            return outro
        return outro * self.inverso()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverso() ** (-n)
        resultado = self.corpo.um()
        base = self
        while n:
            if n & 1:
                resultado = resultado * base
            n >>= 1
            if n:
                base = base * base
        return resultado

    def conjugado(self) -> "ElementoCiclotomico":
        """Conjugação complexa ζ_M^k ↦ ζ_M^{-k}."""
        m = self.corpo.ordem
        bruto = {(-p) % m: c for p, c in self._nums.items()}
        return ElementoCiclotomico(self.corpo, self.corpo.reduzir(bruto), self._den)

    # ------------------------------------------------------------------
    # igualdade e apresentação
    # ------------------------------------------------------------------
    def __eq__(self, outro):
        if isinstance(outro, ElementoCiclotomico):
            return (self.corpo.ordem == outro.corpo.ordem
                    and self._den == outro._den and self._nums == outro._nums)
        if isinstance(outro, (int, Fraction)):
            return self.eh_racional() and self.valor_racional() == outro
        return NotImplemented

    def __hash__(self):
        if self.eh_racional():
            return hash(self.valor_racional())
        return hash((self.corpo.ordem, self._den, frozenset(self._nums.items())))

    def __repr__(self):
        return f"ElementoCiclotomico({self})"

    def __str__(self):
        from utils.conversor import Conversor
        return Conversor.ciclotomico_para_texto(self)


class AcumuladorCiclotomico:
    """
    Acumula somas de produtos de elementos e reduz módulo Φ_M uma vez.

    Usado pela multiplicação de séries: cada coeficiente do produto é
    uma soma de muitos produtos de coeficientes.
    """
    __slots__ = ("corpo", "_por_den")

    def __init__(self, corpo: CorpoCiclotomico):
        self.corpo = corpo
        self._por_den = {}

    def _parcela(self, den: int) -> dict:
        parcela = self._por_den.get(den)
        if parcela is None:
            parcela = self._por_den[den] = {}
        return parcela

    def adicionar_produto(self, a: ElementoCiclotomico, b: ElementoCiclotomico):
        parcela = self._parcela(a._den * b._den)
        for p, c in _produto_bruto(a._nums, b._nums).items():
            parcela[p] = parcela.get(p, 0) + c

    def resultado(self) -> ElementoCiclotomico:
        if not self._por_den:
            return self.corpo.zero()
        den = mmc(*self._por_den)
        bruto = {}
        for d, parcela in self._por_den.items():
            escala = den // d
            for p, c in parcela.items():
                bruto[p] = bruto.get(p, 0) + c * escala
        return ElementoCiclotomico(self.corpo, self.corpo.reduzir(bruto), den)


# ----------------------------------------------------------------------
# construtores
# ----------------------------------------------------------------------
def _corpo(corpo):
    return corpo if corpo is not None else CorpoCiclotomico.padrao()


def raiz_da_unidade(m: int, k: int, corpo: CorpoCiclotomico = None) -> ElementoCiclotomico:
    """
    Devolve ζ_m^k = ζ_M^{kM/m} reduzido módulo Φ_M.

    Args:
        m (int): Ordem da raiz, deve dividir M.
        k (int): Expoente (qualquer inteiro).
        corpo (CorpoCiclotomico): Corpo de trabalho (padrão: Config).

    Raises:
        ErroOrdemCorpo: Se m não dividir M.

    Exemplos:
        >>> raiz_da_unidade(4, 2) == -1
        True
        >>> raiz_da_unidade(1, 0) == 1
        True
    """
    corpo = _corpo(corpo)
    if m < 1 or corpo.ordem % m:
        raise ErroOrdemCorpo(f"ζ_{m} não existe em Q(ζ_{corpo.ordem})")
    return corpo.zeta(k * (corpo.ordem // m))


def fase_racional(r, corpo: CorpoCiclotomico = None) -> ElementoCiclotomico:
    """
    Devolve exp(2πi·r) para r racional.

    Raises:
        ErroOrdemCorpo: Se o denominador de r não dividir M.
    """
    r = Fraction(r)
    return raiz_da_unidade(r.denominator, r.numerator, corpo)


def unidade_imaginaria(corpo: CorpoCiclotomico = None) -> ElementoCiclotomico:
    """i = ζ_4."""
    return raiz_da_unidade(4, 1, corpo)


_raizes = {}
_trava_raizes = threading.Lock()


def raiz_quadrada_inteira(n: int, corpo: CorpoCiclotomico = None) -> ElementoCiclotomico:
    """
    Raiz quadrada real positiva de n ∈ {2, 3, 5} dentro de Q(ζ_M).

    Convenções:
        - √2 = ζ₈ + ζ₈⁻¹
        - √3 = ζ₁₂ + ζ₁₂⁻¹
        - √5 = Σ_{k=0..4} ζ₅^{k²} (soma de Gauss quadrática)

    Na primeira construção de cada raiz o quadrado é conferido
    exatamente e o sinal é conferido numericamente (erro < 1e-9).

    Args:
        n (int): Radicando.
        corpo (CorpoCiclotomico): Corpo de trabalho (padrão: Config).

    Returns:
        ElementoCiclotomico: √n.

    Raises:
        ErroRadicando: Se n não estiver em {2, 3, 5}.
        ErroOrdemCorpo: Se as raízes da unidade necessárias não existirem.

    Exemplos:
        >>> r5 = raiz_quadrada_inteira(5)
        >>> r5 * r5 == 5
        True
    """
    corpo = _corpo(corpo)
    if n not in (2, 3, 5):
        raise ErroRadicando(f"Raiz quadrada de {n} não suportada (use 2, 3 ou 5)")
    chave = (corpo.ordem, n)
    with _trava_raizes:
        raiz = _raizes.get(chave)
    if raiz is not None:
        return raiz
    if n == 2:
        raiz = raiz_da_unidade(8, 1, corpo) + raiz_da_unidade(8, -1, corpo)
    elif n == 3:
        raiz = raiz_da_unidade(12, 1, corpo) + raiz_da_unidade(12, -1, corpo)
    else:
        raiz = corpo.zero()
        for k in range(5):
            raiz = raiz + raiz_da_unidade(5, k * k, corpo)
    if raiz * raiz != n:
        raise ArithmeticError(f"Construção de √{n} não satisfaz o quadrado")
    if abs(raiz.avaliar() - np.sqrt(n)) > TOLERANCIA_IMERSAO:
        raise ArithmeticError(f"Construção de √{n} não é a raiz positiva")
    with _trava_raizes:
        _raizes[chave] = raiz
    return raiz
