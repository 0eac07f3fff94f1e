"""
Módulo de Conversão para Texto e JSON.

Utilitários de apresentação: frações exatas, elementos de Q(ζ_M) e
séries graduadas por π em forma legível ou como lista de termos JSON.

Classes:
    Conversor: Classe com métodos estáticos de conversão.

Exemplos:
    >>> from fractions import Fraction
    >>> Conversor.fracao_para_texto(Fraction(3, 8))
    '3/8'
    >>> from exato.ciclotomico import CorpoCiclotomico
    >>> Conversor.ciclotomico_para_texto(CorpoCiclotomico.padrao().zeta(60))
    'ζ4'
"""
from fractions import Fraction
from math import gcd


class Conversor:
    """
    Classe utilitária de apresentação.

    Métodos:
        fracao_para_texto: Fraction → 'p/r' ou 'p'.
        ciclotomico_para_texto: ElementoCiclotomico → texto mínimo.
        serie_para_texto: SeriePi → 'pi^g * ( c * q^(p/r) + ... )'.
        serie_para_json: SeriePi → dict com lista de termos.

    Notas:
        - Todos os métodos são estáticos, não requerem instanciação
        - Elementos racionais são impressos como racionais
        - Os demais usam a base de potências de ζ_m com o menor m que
          contém todas as potências presentes
    """

    @staticmethod
    def fracao_para_texto(valor) -> str:
        """
        Converte número racional em texto exato.

        Args:
            valor (Fraction | int): Valor a converter; math.inf vira 'inf'.

        Returns:
            str: 'p/r' se o denominador for maior que 1, senão 'p'.
        """
        if valor == float("inf"):
            return "inf"
        valor = Fraction(valor)
        if valor.denominator == 1:
            return str(valor.numerator)
        return f"{valor.numerator}/{valor.denominator}"

    @staticmethod
    def ciclotomico_para_texto(elemento) -> str:
        """
        Texto de um elemento de Q(ζ_M).

        Racionais saem como racionais; os demais como polinômio em ζ_m,
        onde m = M/g e g é o mdc das potências presentes com M.

        Exemplos:
            >>> corpo = CorpoCiclotomico.padrao()
            >>> Conversor.ciclotomico_para_texto(corpo.zeta(24) * 2 - 1)
            '-1 + 2*ζ10'
        """
        if elemento.eh_racional():
            return Conversor.fracao_para_texto(elemento.valor_racional())
        termos = elemento.termos()
        ordem = elemento.corpo.ordem
        g = ordem
        for p, _ in termos:
            g = gcd(g, p)
        m = ordem // g
        partes = []
        for p, c in termos:
            k = p // g
            if k == 0:
                base = None
            elif k == 1:
                base = f"ζ{m}"
            else:
                base = f"ζ{m}^{k}"
            if base is None:
                monomio = Conversor.fracao_para_texto(abs(c))
            elif abs(c) == 1:
                monomio = base
            else:
                monomio = f"{Conversor.fracao_para_texto(abs(c))}*{base}"
            sinal = "-" if c < 0 else "+"
            if not partes:
                partes.append(monomio if c > 0 else f"-{monomio}")
            else:
                partes.append(f"{sinal} {monomio}")
        return " ".join(partes)

    @staticmethod
    def _coeficiente_com_parenteses(coeficiente) -> str:
        texto = Conversor.ciclotomico_para_texto(coeficiente)
        if coeficiente.eh_racional():
            return texto
        return f"({texto})"

    @staticmethod
    def serie_para_texto(serie) -> str:
        """
        Texto de uma SeriePi.

        Formato: 'pi^g * ( c * q^(p/r) + ... + O(q^(T)) )'; o fator pi^g
        é omitido quando g = 0 e O(·) quando a série é exata.

        Exemplos:
            >>> Conversor.serie_para_texto(SeriePi({0: 1, 1: -24}, trunc=2))
            '( 1 - 24 * q + O(q^2) )'
        """
        partes = []
        for e, c in serie.itens():
            negativo = c.eh_racional() and c.valor_racional() < 0
            absoluto = -c if negativo else c
            coeficiente = Conversor._coeficiente_com_parenteses(absoluto)
            if e == 0:
                monomio = coeficiente
            else:
                if e == 1:
                    potencia = "q"
                elif e.denominator == 1:
                    potencia = f"q^{e.numerator}"
                else:
                    potencia = f"q^({Conversor.fracao_para_texto(e)})"
                if absoluto == 1:
                    monomio = potencia
                else:
                    monomio = f"{coeficiente} * {potencia}"
            if not partes:
                partes.append(f"-{monomio}" if negativo else monomio)
            else:
                partes.append(f"{'-' if negativo else '+'} {monomio}")
        if serie.trunc != float("inf"):
            resto = f"O(q^{Conversor.fracao_para_texto(serie.trunc)})"
            partes.append(f"+ {resto}" if partes else resto)
        if not partes:
            partes.append("0")
        corpo = f"( {' '.join(partes)} )"
        if serie.grau == 0:
            return corpo
        return f"pi^{serie.grau} * {corpo}"

    @staticmethod
    def serie_para_json(serie, nome: str = None) -> dict:
        """
        Forma JSON de uma SeriePi.

        Returns:
            dict: {'name', 'piGrade', 'truncation', 'terms': [{'exponent', 'coefficient'}]},
                  com expoentes como frações exatas em texto.
        """
        return {
            "name": nome,
            "piGrade": serie.grau,
            "truncation": Conversor.fracao_para_texto(serie.trunc),
            "terms": [
                {"exponent": Conversor.fracao_para_texto(e),
                 "coefficient": Conversor.ciclotomico_para_texto(c)}
                for e, c in serie.itens()
            ],
        }
