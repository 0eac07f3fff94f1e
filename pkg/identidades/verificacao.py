"""
Módulo de Verificações de Identidades.

Cada identidade é uma Verificacao: monta séries pela fábrica, forma o
resíduo (lado esquerdo menos lado direito, com denominadores já
eliminados) e testa se ele se anula até a ordem verificada.

Toda verificação tem uma variante perturbada (um coeficiente trocado,
um sinal invertido, um fator de π dobrado) que precisa FALHAR; isso
protege contra resíduos nulos por construção.

Classes:
    Verificacao: Classe abstrata base.
    VerificacaoSerie: Resíduos em SeriePi montados por uma função.
    VerificacaoJato: Resíduos em JatoZ (identidades em z).
    VerificacaoAritmetica: Igualdade de funções aritméticas termo a termo.
    VerificacaoRiccati: q dW/dq = g(q)·p(W).
    VerificacaoConstanteRiccati: p(W₀) = 0 e W₀ igual ao valor esperado.

Exemplos:
    >>> from identidades.fabrica import FabricaSeries
    >>> v = VerificacaoSerie("quartica", "θ00⁴ - θ01⁴ - θ10⁴ = 0", "sinal de θ01⁴ trocado",
    ...     lambda f, p: [f.teta(0, 0)**4 + (1 if p else -1) * f.teta(0, 1)**4 - f.teta(1, 0)**4])
    >>> v.executar(FabricaSeries(ordem_q=4)).passou
    True
"""
import logging
import time
from abc import ABC, abstractmethod
from fractions import Fraction

from config import Config
from series.jato_z import JatoZ
from series.serie_pi import SeriePi
from identidades.relatorio import RelatorioVerificacao, Testemunha

logger = logging.getLogger(__name__)

# remontagens com margem maior antes de declarar o resíduo curto
TENTATIVAS_AMPLIACAO = 2


class Verificacao(ABC):
    """
    Classe abstrata base para verificações.

    Attributes:
        id (str): Identificador no registro.
        enunciado (str): Fórmula verificada (legível).
        perturbacao (str): Descrição da variante perturbada.

    Métodos Abstratos:
        residuos: Lista de resíduos (SeriePi ou JatoZ) que devem ser nulos.
    """
    usa_z = False

    def __init__(self, id: str, enunciado: str, perturbacao: str):
        self.id = id
        self.enunciado = enunciado
        self.perturbacao = perturbacao

    @abstractmethod
    def residuos(self, fabrica, perturbar: bool = False) -> list:
        """
        Monta os resíduos da identidade.

        Args:
            fabrica (FabricaSeries): Fonte das séries.
            perturbar (bool): Se True, monta a variante perturbada.

        Returns:
            list: SeriePi ou JatoZ; a identidade vale se todos forem nulos.
        """
        pass

    def ordem_verificada(self, fabrica) -> Fraction:
        return fabrica.ordem_q

    def executar(self, fabrica, perturbar: bool = False) -> RelatorioVerificacao:
        """
        Executa a verificação e produz o relatório.

        Um resíduo conhecido só abaixo da ordem verificada é remontado com
        margem maior (até TENTATIVAS_AMPLIACAO vezes); se continuar curto,
        a verificação falha com diagnóstico. A ordem reportada é sempre a
        pedida.

        Erros de construção (ValueError e ArithmeticError, o que inclui
        ErroGrau) viram relatório reprovado com diagnóstico; nunca
        interrompem a execução do conjunto.
        """
        inicio = time.perf_counter()
        ordem = self.ordem_verificada(fabrica)
        ordem_z = fabrica.ordem_z if self.usa_z else None
        identificador = f"{self.id}:perturbed" if perturbar else self.id
        enunciado = f"{self.enunciado} [perturbação: {self.perturbacao}]" if perturbar else self.enunciado
        testemunha = None
        diagnostico = None
        fonte = fabrica
        try:
            for tentativa in range(TENTATIVAS_AMPLIACAO + 1):
                testemunha, alcance = self._examinar(fonte, perturbar, ordem)
                if testemunha is not None or alcance is None:
                    break
                if tentativa == TENTATIVAS_AMPLIACAO:
                    diagnostico = (f"resíduo determinado só até q^{alcance}, abaixo da ordem "
                                   f"verificada q^{ordem}")
                    logger.warning("%s: %s", identificador, diagnostico)
                    break
                logger.info("%s: resíduo curto (q^%s < q^%s), margem ampliada", identificador, alcance, ordem)
                fonte = fonte.ampliada(ordem - alcance + 1)
        except (ValueError, ArithmeticError) as erro:
            diagnostico = f"{type(erro).__name__}: {erro}"
            logger.warning("%s: falha de construção: %s", identificador, diagnostico)
        milissegundos = int(round((time.perf_counter() - inicio) * 1000))
        passou = diagnostico is None and testemunha is None
        logger.debug("%s: %s em %d ms", identificador, "ok" if passou else "falhou", milissegundos)
        return RelatorioVerificacao(identificador, enunciado, ordem, ordem_z, passou,
                                    testemunha, milissegundos, diagnostico)

    def _examinar(self, fabrica, perturbar: bool, ordem) -> tuple:
        """
        Procura a testemunha nos resíduos até a ordem.

        Returns:
            tuple: (testemunha ou None, menor truncamento abaixo da ordem
                   ou None se todos os resíduos alcançam a ordem).
        """
        alcance = None
        for residuo in self.residuos(fabrica, perturbar):
            trunc = residuo_truncamento(residuo)
            testemunha = _testemunha(residuo.truncar(min(ordem, trunc)))
            if testemunha is not None:
                return testemunha, None
            if trunc < ordem:
                alcance = trunc if alcance is None else min(alcance, trunc)
        return None, alcance

    def __repr__(self):
        return f"{type(self).__name__}({self.id!r})"


def residuo_truncamento(residuo):
    if isinstance(residuo, JatoZ):
        return min(c.trunc for c in residuo.coefs)
    return residuo.trunc


def _testemunha(residuo):
    nulo, termo = residuo.verificar_nulidade()
    if nulo:
        return None
    if isinstance(residuo, JatoZ):
        k, expoente, coef = termo
        return Testemunha(expoente, str(coef), k)
    expoente, coef = termo
    return Testemunha(expoente, str(coef), None)


class VerificacaoSerie(Verificacao):
    """
    Resíduos em SeriePi produzidos por construtor(fabrica, perturbar).

    Args:
        limite: Nome opcional do atributo da Config que fixa a ordem
            verificada (passo·(limite + 1)) em vez de ORDEM_Q.
        passo: Expoentes de q por índice n (2 para séries em q^{2n+1}).
    """

    def __init__(self, id: str, enunciado: str, perturbacao: str, construtor, limite: str = None,
                 passo: int = 1):
        super().__init__(id, enunciado, perturbacao)
        self.construtor = construtor
        self.limite = limite
        self.passo = passo

    def ordem_verificada(self, fabrica) -> Fraction:
        if self.limite is None:
            return fabrica.ordem_q
        return Fraction(self.passo * (getattr(Config(), self.limite) + 1))

    def residuos(self, fabrica, perturbar: bool = False) -> list:
        return list(self.construtor(fabrica, perturbar))


class VerificacaoJato(VerificacaoSerie):
    """Identidades em (z, τ): resíduos em JatoZ até z^K."""
    usa_z = True


class VerificacaoAritmetica(Verificacao):
    """
    Compara duas funções aritméticas para n = inicio..limite.

    O resíduo é a série Σ (esquerda(n) - direita(n)) qⁿ truncada em
    limite + 1, de modo que a testemunha aponta o primeiro n divergente.

    Args:
        limite: Nome do atributo da Config com o maior n (ex.: 'LIMITE_T4').
        esquerda, direita: Funções n -> int; recebem (n, perturbar).
    """

    def __init__(self, id: str, enunciado: str, perturbacao: str, esquerda, direita,
                 limite: str, inicio: int = 0):
        super().__init__(id, enunciado, perturbacao)
        self.esquerda = esquerda
        self.direita = direita
        self.limite = limite
        self.inicio = inicio

    def ordem_verificada(self, fabrica) -> Fraction:
        return Fraction(getattr(Config(), self.limite) + 1)

    def residuos(self, fabrica, perturbar: bool = False) -> list:
        fim = getattr(Config(), self.limite)
        termos = {}
        for n in range(self.inicio, fim + 1):
            diferenca = self.esquerda(n, perturbar) - self.direita(n, perturbar)
            if diferenca:
                termos[n] = diferenca
        return [SeriePi(termos, fim + 1, 0, fabrica.corpo)]


class VerificacaoRiccati(Verificacao):
    """
    c·q dW/dq - g(q)·p(W) = 0 para uma EspecificacaoRiccati.

    Na variante perturbada p é trocado por espec.polinomio_perturbado.
    """

    def __init__(self, id: str, espec):
        super().__init__(id, espec.enunciado, espec.perturbacao)
        self.espec = espec

    def residuos(self, fabrica, perturbar: bool = False) -> list:
        return [self.espec.residuo(fabrica, perturbar)]


class VerificacaoConstanteRiccati(Verificacao):
    """
    Termo constante W₀ de uma EspecificacaoRiccati: p(W₀) = 0 exatamente
    e W₀ igual à raiz esperada.
    """

    def __init__(self, id: str, espec):
        raiz = espec.descrever_raiz()
        super().__init__(id, f"W₀ = {raiz} e p(W₀) = 0 para {espec.nome}", espec.perturbacao)
        self.espec = espec

    def ordem_verificada(self, fabrica) -> Fraction:
        return Fraction(1)

    def residuos(self, fabrica, perturbar: bool = False) -> list:
        corpo = fabrica.corpo
        w0 = self.espec.construir_w(fabrica).coeficiente(0)
        p_w0 = self.espec.avaliar_polinomio(w0, perturbar)
        esperado = self.espec.raiz_esperada(corpo)
        return [SeriePi.constante(p_w0, trunc=1, corpo=corpo),
                SeriePi.constante(w0 - esperado, trunc=1, corpo=corpo)]
