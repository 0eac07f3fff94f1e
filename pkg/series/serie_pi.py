"""
Módulo de Séries de Puiseux Truncadas com Grau em π.

Uma SeriePi representa π^g · Σ c_e q^e, com expoentes e racionais
exatos (Fraction), coeficientes em Q(ζ_M) e um truncamento T: todo
coeficiente com e < T é conhecido, nada se sabe a partir de T.

O grau g em π torna cada identidade homogênea: somar séries de graus
diferentes é erro (ErroGrau), o que denuncia identidades mal formadas.
A série nula é polimórfica no grau.

Classes:
    SeriePi: Série truncada imutável.

Exemplos:
    >>> q = SeriePi.monomio(1, 1, trunc=10)
    >>> (1 - q).inversa().coeficiente(3) == 1
    True
    >>> SeriePi.monomio(1, Fraction(1, 8), trunc=10).q_ddq().coeficiente(Fraction(1, 8)) == Fraction(1, 8)
    True
"""
import heapq
import math
from fractions import Fraction

from config import Config
from exato.ciclotomico import AcumuladorCiclotomico, CorpoCiclotomico, ElementoCiclotomico
from exato.erros import ErroGrau, ErroTermoDominante

INF = math.inf


def _como_trunc(valor):
    if valor is None or valor == INF:
        return INF
    return Fraction(valor)


def _somar_trunc(a, b):
    if a == INF or b == INF:
        return INF
    return a + b


class SeriePi:
    """
    Série π^grau · Σ c_e q^e truncada em q^trunc.

    Attributes:
        corpo (CorpoCiclotomico): Corpo dos coeficientes.
        grau (int): Potência de π.
        trunc (Fraction | float): Truncamento exclusivo (INF para série exata).

    Notas:
        - Nenhum coeficiente guardado é nulo e todo expoente guardado é < trunc
        - Operações devolvem novas séries; instâncias nunca são alteradas
        - Escalares (int, Fraction, ElementoCiclotomico) são aceitos em
          soma e produto; na soma assumem o grau da série
    """
    __slots__ = ("corpo", "_termos", "trunc", "grau")

    def __init__(self, termos: dict = None, trunc=INF, grau: int = 0, corpo: CorpoCiclotomico = None):
        self.corpo = corpo if corpo is not None else CorpoCiclotomico.padrao()
        self.trunc = _como_trunc(trunc)
        self.grau = grau
        limpos = {}
        if termos:
            for e, c in termos.items():
                e = Fraction(e)
                if e >= self.trunc:
                    continue
                c = self.corpo.elemento(c)
                if c:
                    limpos[e] = c
        self._termos = limpos

    @classmethod
    def _direto(cls, termos: dict, trunc, grau: int, corpo: CorpoCiclotomico) -> "SeriePi":
        # termos já limpos (expoentes Fraction < trunc, coeficientes não nulos)
        serie = cls.__new__(cls)
        serie.corpo = corpo
        serie.trunc = trunc
        serie.grau = grau
        serie._termos = termos
        return serie

    # ------------------------------------------------------------------
    # construtores
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, trunc=INF, grau: int = 0, corpo: CorpoCiclotomico = None) -> "SeriePi":
        return cls({}, trunc, grau, corpo)

    @classmethod
    def constante(cls, c, trunc=INF, grau: int = 0, corpo: CorpoCiclotomico = None) -> "SeriePi":
        return cls({Fraction(0): c}, trunc, grau, corpo)

    @classmethod
    def monomio(cls, c, expoente, trunc=INF, grau: int = 0, corpo: CorpoCiclotomico = None) -> "SeriePi":
        """c·q^expoente (com grau em π)."""
        return cls({Fraction(expoente): c}, trunc, grau, corpo)

    # ------------------------------------------------------------------
    # consultas
    # ------------------------------------------------------------------
    def itens(self) -> list:
        """Pares (expoente, coeficiente) em ordem crescente de expoente."""
        return sorted(self._termos.items())

    def __len__(self):
        return len(self._termos)

    def eh_nula(self) -> bool:
        """True se não há termos abaixo do truncamento."""
        return not self._termos

    def valuacao(self):
        """Menor expoente com coeficiente não nulo (None para a série nula)."""
        return min(self._termos) if self._termos else None

    def termo_dominante(self) -> tuple:
        """
        Termo de menor expoente.

        Raises:
            ErroTermoDominante: Se a série for nula até o truncamento.
        """
        if not self._termos:
            raise ErroTermoDominante(f"Série nula até q^{self.trunc}: sem termo dominante")
        e = min(self._termos)
        return e, self._termos[e]

    def coeficiente(self, expoente) -> ElementoCiclotomico:
        """
        Coeficiente de q^expoente.

        Raises:
            ValueError: Se expoente >= trunc (coeficiente indeterminado).
        """
        e = Fraction(expoente)
        if e >= self.trunc:
            raise ValueError(f"Coeficiente de q^{e} indeterminado (truncamento {self.trunc})")
        return self._termos.get(e, self.corpo.zero())

    def verificar_nulidade(self) -> tuple:
        """
        Testa se a série é nula até o truncamento.

        Returns:
            tuple: (True, None) se nula; senão (False, (expoente, coeficiente))
            com o termo de menor expoente como testemunha.

        Exemplos:
            >>> SeriePi.monomio(1, 49, trunc=50).verificar_nulidade()[0]
            False
        """
        if not self._termos:
            return True, None
        return False, self.termo_dominante()

    # ------------------------------------------------------------------
    # aritmética
    # ------------------------------------------------------------------
    def _coagir(self, outro) -> "SeriePi":
        if isinstance(outro, SeriePi):
            return outro
        if isinstance(outro, (int, Fraction, ElementoCiclotomico)):
            return SeriePi.constante(outro, INF, self.grau, self.corpo)
        return NotImplemented

    def __add__(self, outro):
        outro = self._coagir(outro)
        if outro is NotImplemented:
            return outro
        if self._termos and outro._termos and self.grau != outro.grau:
            raise ErroGrau(f"Soma de séries com graus em π diferentes ({self.grau} e {outro.grau})")
        grau = self.grau if self._termos else outro.grau
        trunc = min(self.trunc, outro.trunc)
        termos = {e: c for e, c in self._termos.items() if e < trunc}
        for e, c in outro._termos.items():
            if e >= trunc:
                continue
            atual = termos.get(e)
            if atual is None:
                termos[e] = c
            else:
                soma = atual + c
                if soma:
                    termos[e] = soma
                else:
                    del termos[e]
        return SeriePi._direto(termos, trunc, grau, self.corpo)

    __radd__ = __add__

    def __neg__(self):
        return SeriePi._direto({e: -c for e, c in self._termos.items()}, self.trunc, self.grau, self.corpo)

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
        if isinstance(outro, (int, Fraction, ElementoCiclotomico)):
            return self._vezes_escalar(outro)
        if not isinstance(outro, SeriePi):
            return NotImplemented
        grau = self.grau + outro.grau
        va = self.valuacao()
        vb = outro.valuacao()
        if va is None and self.trunc == INF or vb is None and outro.trunc == INF:
            return SeriePi._direto({}, INF, grau, self.corpo)
        if va is None:
            va = self.trunc
        if vb is None:
            vb = outro.trunc
        trunc = min(_somar_trunc(self.trunc, vb), _somar_trunc(outro.trunc, va))
        acumuladores = {}
        itens_b = outro.itens()
        for ea, ca in self.itens():
            if ea + vb >= trunc:
                break
            for eb, cb in itens_b:
                e = ea + eb
                if e >= trunc:
                    break
                acc = acumuladores.get(e)
                if acc is None:
                    acc = acumuladores[e] = AcumuladorCiclotomico(self.corpo)
                acc.adicionar_produto(ca, cb)
        termos = {}
        for e, acc in acumuladores.items():
            c = acc.resultado()
            if c:
                termos[e] = c
        return SeriePi._direto(termos, trunc, grau, self.corpo)

    def __rmul__(self, outro):
        if isinstance(outro, (int, Fraction, ElementoCiclotomico)):
            return self._vezes_escalar(outro)
        return NotImplemented

    def _vezes_escalar(self, c) -> "SeriePi":
        c = self.corpo.elemento(c)
        if not c:
            return SeriePi._direto({}, self.trunc, self.grau, self.corpo)
        return SeriePi._direto({e: v * c for e, v in self._termos.items()}, self.trunc, self.grau, self.corpo)

    def inversa(self, trunc=None) -> "SeriePi":
        """
        Inverso multiplicativo.

        Fatora o monômio dominante c₀q^{e₀} e inverte 1 + u pela
        recorrência d_s = -Σ u_p d_{s-p} sobre o fecho aditivo do suporte.
        Com truncamento T a inversa é conhecida até T - 2e₀.

        Args:
            trunc: Truncamento desejado. Obrigatório na prática para
                séries exatas; quando omitido usa ORDEM_Q + MARGEM da Config.

        Returns:
            SeriePi: b com a·b = 1 até o truncamento, grau -grau.

        Raises:
            ErroTermoDominante: Se a série for nula até o truncamento.

        Exemplos:
            >>> (2 + SeriePi.monomio(1, 1, trunc=3)).inversa().coeficiente(2) == Fraction(1, 8)
            True
        """
        e0, c0 = self.termo_dominante()
        natural = _somar_trunc(self.trunc, -2 * e0)
        if trunc is None:
            if natural == INF:
                config = Config()
                trunc = config.ORDEM_Q + config.MARGEM_TRUNCAMENTO
            else:
                trunc = natural
        trunc = min(_como_trunc(trunc), natural)
        inv0 = c0.inverso()
        limite = trunc + e0  # expoentes relativos de (1+u)^{-1}
        u = {}
        for e, c in self._termos.items():
            s = e - e0
            if s > 0 and s < limite:
                u[s] = c * inv0
        passos = sorted(u)
        # fecho aditivo do suporte abaixo do limite
        suporte = {Fraction(0)}
        fila = [Fraction(0)]
        while fila:
            s = heapq.heappop(fila)
            for p in passos:
                t = s + p
                if t >= limite:
                    break
                if t not in suporte:
                    suporte.add(t)
                    heapq.heappush(fila, t)
        d = {Fraction(0): self.corpo.um()}
        for s in sorted(suporte):
            if s == 0:
                continue
            acc = AcumuladorCiclotomico(self.corpo)
            for p in passos:
                if p > s:
                    break
                anterior = d.get(s - p)
                if anterior is not None:
                    acc.adicionar_produto(u[p], anterior)
            valor = acc.resultado()
            if valor:
                d[s] = -valor
        termos = {}
        for s, c in d.items():
            e = s - e0
            if e < trunc:
                termos[e] = c * inv0
        return SeriePi._direto(termos, trunc, -self.grau, self.corpo)

    def __truediv__(self, outro):
        if isinstance(outro, (int, Fraction, ElementoCiclotomico)):
            return self._vezes_escalar(1 / self.corpo.elemento(outro))
        if isinstance(outro, SeriePi):
            return self * outro.inversa()
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inversa() ** (-n)
        resultado = SeriePi.constante(1, INF, 0, self.corpo)
        base = self
        while n:
            if n & 1:
                resultado = resultado * base
            n >>= 1
            if n:
                base = base * base
        return resultado

    def q_ddq(self) -> "SeriePi":
        """Operador q·d/dq: c·q^e ↦ (e·c)·q^e; grau e truncamento mantidos."""
        termos = {e: c * e for e, c in self._termos.items() if e}
        return SeriePi._direto(termos, self.trunc, self.grau, self.corpo)

    def escalar_q(self, k: int) -> "SeriePi":
        """
        Substituição q ↦ q^k (avaliação em kτ).

        Raises:
            ValueError: Se k não for inteiro positivo.
        """
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"Fator de escala em q deve ser inteiro positivo (recebido {k})")
        trunc = self.trunc if self.trunc == INF else self.trunc * k
        return SeriePi._direto({e * k: c for e, c in self._termos.items()}, trunc, self.grau, self.corpo)

    def vezes_pi(self, k: int = 1) -> "SeriePi":
        """Multiplica por π^k (apenas o grau muda)."""
        return SeriePi._direto(dict(self._termos), self.trunc, self.grau + k, self.corpo)

    def vezes_q(self, expoente) -> "SeriePi":
        """Multiplica por q^expoente (o truncamento acompanha)."""
        e0 = Fraction(expoente)
        return SeriePi._direto({e + e0: c for e, c in self._termos.items()},
                               _somar_trunc(self.trunc, e0), self.grau, self.corpo)

    def truncar(self, trunc) -> "SeriePi":
        """Descarta os termos com expoente >= trunc."""
        trunc = min(_como_trunc(trunc), self.trunc)
        return SeriePi._direto({e: c for e, c in self._termos.items() if e < trunc}, trunc, self.grau, self.corpo)

    # ------------------------------------------------------------------
    # igualdade e apresentação
    # ------------------------------------------------------------------
    def __eq__(self, outro):
        outro = self._coagir(outro)
        if outro is NotImplemented:
            return outro
        trunc = min(self.trunc, outro.trunc)
        a = {e: c for e, c in self._termos.items() if e < trunc}
        b = {e: c for e, c in outro._termos.items() if e < trunc}
        if not a and not b:
            return True
        return self.grau == outro.grau and a == b

    __hash__ = None

    def __repr__(self):
        return f"SeriePi(grau={self.grau}, trunc={self.trunc}, termos={len(self._termos)})"

    def __str__(self):
        from utils.conversor import Conversor
        return Conversor.serie_para_texto(self)
