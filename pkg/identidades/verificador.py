"""
Módulo Verificador - Execução do Registro de Identidades.

O Verificador seleciona verificações do registro por padrão glob,
constrói uma FabricaSeries compartilhada e executa as verificações em
paralelo. Os relatórios voltam sempre ordenados por id, qualquer que
seja a ordem de término das threads.

Fluxo:
    padrão glob
        ↓ selecionar
    list[Verificacao]
        ↓ FabricaSeries(ordem_q, ordem_z)
    séries memorizadas
        ↓ ThreadPoolExecutor(Config().MAX_THREADS)
    list[RelatorioVerificacao]

Exemplos:
    >>> verificador = Verificador()
    >>> relatorios = verificador.executar_todas(ordem_q=4, padrao="jacobi_*")
    >>> [r.id for r in relatorios]
    ['jacobi_derivative', 'jacobi_quartic']
    >>> all(r.passou for r in relatorios)
    True
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from fnmatch import fnmatchcase

from config import Config
from identidades.fabrica import FabricaSeries
from identidades.registro import criar_registro

logger = logging.getLogger(__name__)


class Verificador:
    """
    Coordena a execução das verificações.

    Attributes:
        registro (list): Verificações disponíveis, ordenadas por id.
        historico (list): Log de execuções para debug.

    Tratamento de Erros:
        - ValueError: padrão que não casa com nenhuma verificação
        - Falhas de construção viram relatórios reprovados, nunca exceções
    """

    def __init__(self, registro: list = None):
        self.registro = registro if registro is not None else criar_registro()
        self.historico = []

    def buscar(self, id: str):
        """
        Verificação com o id exato.

        Raises:
            KeyError: Se o id não estiver registrado.
        """
        for verificacao in self.registro:
            if verificacao.id == id:
                return verificacao
        raise KeyError(id)

    def selecionar(self, padrao: str = None) -> list:
        """
        Verificações cujo id casa com o padrão glob.

        Args:
            padrao (str): Glob ('riccati_*', 'level8_identity_?'); None seleciona todas.

        Raises:
            ValueError: Se nenhuma verificação casar.
        """
        if padrao is None:
            return list(self.registro)
        selecionadas = [v for v in self.registro if fnmatchcase(v.id, padrao)]
        if not selecionadas:
            raise ValueError(f"Nenhuma verificação registrada casa com {padrao!r}")
        return selecionadas

    def executar_todas(self, ordem_q=None, ordem_z: int = None, padrao: str = None,
                       negativos: bool = False) -> list:
        """
        Executa as verificações selecionadas.

        Args:
            ordem_q: Ordem em q (padrão Config().ORDEM_Q).
            ordem_z (int): Ordem K dos jatos (padrão Config().ORDEM_Z).
            padrao (str): Glob de ids; None executa o registro inteiro.
            negativos (bool): Se True, executa as variantes perturbadas.

        Returns:
            list: RelatorioVerificacao ordenados por id.

        Raises:
            ValueError: Padrão sem correspondência ou ordens inválidas.
        """
        selecionadas = self.selecionar(padrao)
        fabrica = FabricaSeries(ordem_q, ordem_z)
        if fabrica.ordem_q <= 0:
            raise ValueError(f"Ordem em q deve ser positiva (recebido {fabrica.ordem_q})")
        threads = min(Config().MAX_THREADS, len(selecionadas))
        modo = "controles negativos" if negativos else "identidades"
        self._log(f"VERIFICAÇÃO: {len(selecionadas)} {modo}, q^{fabrica.ordem_q}, z^{fabrica.ordem_z}, "
                  f"{threads} threads")

        with ThreadPoolExecutor(max_workers=threads) as executor:
            relatorios = list(executor.map(lambda v: v.executar(fabrica, negativos), selecionadas))

        relatorios.sort(key=lambda r: r.id)
        for relatorio in relatorios:
            self._log(f"VERIFICAÇÃO: {relatorio.id} {'PASS' if relatorio.passou else 'FAIL'} "
                      f"({relatorio.milissegundos} ms)")
        self._log(f"VERIFICAÇÃO: {sum(r.passou for r in relatorios)}/{len(relatorios)} aprovadas, "
                  f"{len(fabrica)} séries construídas")
        return relatorios

    def _log(self, mensagem: str):
        """Registra evento no histórico"""
        self.historico.append(mensagem)
        logger.debug(mensagem)
        if Config().VERBOSO:
            logger.info(mensagem)

    def get_historico(self) -> list:
        """Retorna histórico de execuções"""
        return self.historico.copy()

    def limpar_historico(self):
        """Limpa histórico"""
        self.historico.clear()


def run_all(ordem_q=None, ordem_z: int = None, padrao: str = None, negativos: bool = False) -> list:
    """Atalho: executa o registro padrão com um Verificador novo."""
    return Verificador().executar_todas(ordem_q, ordem_z, padrao, negativos)
