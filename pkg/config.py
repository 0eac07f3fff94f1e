"""
Módulo de Configurações Globais do Verificador de Identidades.

Este módulo implementa um Singleton para gerenciar todas as configurações
do motor de q-séries: ordem do corpo ciclotômico, ordens de truncamento
em q e em z, limites das funções aritméticas e parâmetros de execução
(paralelismo, formato de saída, verbosidade).

Classes:
    Config: Singleton que armazena e gerencia todas as configurações globais.

Exemplos:
    >>> config = Config()
    >>> config.set_ordem_q("30")
    >>> config.set_ordem_z(4)
    >>> print(config.ORDEM_Q, config.ORDEM_Z)
    30 4
"""
import os
from fractions import Fraction

ORDEM_CORPO_PADRAO = 240
VARIAVEL_THREADS = "THETA_RICCATI_THREADS"


class Config:
    """
    Singleton para gerenciamento de configurações globais do motor.

    Esta classe implementa o padrão Singleton para garantir que apenas uma
    instância das configurações exista durante toda a execução do programa.

    Attributes:
        ORDEM_CORPO (int): Ordem M do corpo ciclotômico Q(ζ_M) (padrão 240).
        ORDEM_Q (Fraction): Ordem em q verificada (expoentes e < ORDEM_Q).
        ORDEM_Z (int): Ordem K dos jatos em z (coeficientes c_0..c_K).
        LIMITE_T4 (int): Maior n testado em t4(n) = σ(2n+1).
        LIMITE_COROLARIO (int): Maior n comparado nas expansões de nível 8.
        MARGEM_TRUNCAMENTO (Fraction): Ordem extra usada na construção
            das séries antes do corte final do resíduo.
        MAX_THREADS (int): Número de verificações executadas em paralelo.
        FORMATO (str): Formato dos relatórios ('text' ou 'json').
        VERBOSO (bool): Espelha o histórico do verificador no stderr.

    Notas:
        - ORDEM_CORPO deve ser múltipla de 240 para que ζ₁₆, ζ₁₂, ζ₂₀,
          i, √2, √3 e √5 existam no corpo
        - MAX_THREADS pode ser limitado pela variável de ambiente
          THETA_RICCATI_THREADS
    """
    _instance = None

    def __new__(cls):
        """
        Implementa o padrão Singleton.

        Returns:
            Config: A única instância da classe Config.
        """
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._inicializar()
        return cls._instance

    def _inicializar(self):
        """
        Inicializa os valores padrão de todas as configurações.

        Chamado na criação do Singleton e por restaurar_padroes().
        """
        # Aritmética exata
        self.ORDEM_CORPO = ORDEM_CORPO_PADRAO

        # Truncamento
        self.ORDEM_Q = Fraction(50)
        self.ORDEM_Z = 4
        self.MARGEM_TRUNCAMENTO = Fraction(2)

        # Funções aritméticas
        self.LIMITE_T4 = 200
        self.LIMITE_COROLARIO = 100

        # Execução
        self.MAX_THREADS = self._threads_do_ambiente()
        self.FORMATO = "text"
        self.VERBOSO = False

    @staticmethod
    def _threads_do_ambiente() -> int:
        valor = os.environ.get(VARIAVEL_THREADS)
        if valor:
            try:
                threads = int(valor)
            except ValueError:
                threads = 0
            if threads >= 1:
                return threads
        return os.cpu_count() or 1

    def restaurar_padroes(self):
        """Volta todas as configurações aos valores padrão."""
        self._inicializar()

    def set_ordem_corpo(self, ordem: int):
        """
        Atualiza a ordem M do corpo ciclotômico.

        Args:
            ordem (int): Nova ordem, múltipla positiva de 240.

        Raises:
            ValueError: Se a ordem não for múltipla positiva de 240.

        Exemplos:
            >>> Config().set_ordem_corpo(480)
        """
        if not isinstance(ordem, int) or ordem < 1:
            raise ValueError("Ordem do corpo deve ser um inteiro positivo")
        if ordem % ORDEM_CORPO_PADRAO != 0:
            raise ValueError(
                f"Ordem do corpo deve ser múltipla de {ORDEM_CORPO_PADRAO} "
                f"para o registro padrão (recebido {ordem})")
        self.ORDEM_CORPO = ordem

    def set_ordem_q(self, ordem):
        """
        Atualiza a ordem de truncamento em q.

        Args:
            ordem (str | int | Fraction): Ordem positiva, aceita "p" ou "p/r".

        Raises:
            ValueError: Se a ordem não for um racional positivo.

        Exemplos:
            >>> config = Config()
            >>> config.set_ordem_q("81/2")
            >>> config.ORDEM_Q
            Fraction(81, 2)
        """
        try:
            valor = Fraction(ordem)
        except (ValueError, ZeroDivisionError, TypeError):
            raise ValueError(f"Ordem em q inválida: {ordem!r}")
        if valor <= 0:
            raise ValueError("Ordem em q deve ser positiva")
        self.ORDEM_Q = valor

    def set_ordem_z(self, ordem: int):
        """
        Atualiza a ordem K dos jatos em z.

        Raises:
            ValueError: Se ordem < 2 (a relação do calor usa c_{k+2}).
        """
        if not isinstance(ordem, int) or ordem < 2:
            raise ValueError("Ordem em z mínima é 2")
        self.ORDEM_Z = ordem

    def set_margem(self, margem):
        """Atualiza a margem de truncamento usada na construção das séries."""
        valor = Fraction(margem)
        if valor < 0:
            raise ValueError("Margem de truncamento não pode ser negativa")
        self.MARGEM_TRUNCAMENTO = valor

    def set_limite_t4(self, limite: int):
        """Atualiza o maior n verificado em t4(n) = σ(2n+1)."""
        if limite < 0:
            raise ValueError("Limite de t4 não pode ser negativo")
        self.LIMITE_T4 = limite

    def set_limite_corolario(self, limite: int):
        """Atualiza o maior n comparado nas expansões por somas de divisores."""
        if limite < 1:
            raise ValueError("Limite das expansões deve ser pelo menos 1")
        self.LIMITE_COROLARIO = limite

    def set_max_threads(self, threads: int):
        """
        Atualiza o número máximo de verificações em paralelo.

        Raises:
            ValueError: Se threads < 1.
        """
        if threads < 1:
            raise ValueError("Número de threads deve ser pelo menos 1")
        self.MAX_THREADS = threads

    def set_formato(self, formato: str):
        """
        Atualiza o formato de saída dos relatórios.

        Raises:
            ValueError: Se o formato não for 'text' nem 'json'.
        """
        if formato not in ("text", "json"):
            raise ValueError(f"Formato desconhecido: {formato!r} (use text ou json)")
        self.FORMATO = formato

    def set_verboso(self, verboso: bool):
        """Liga ou desliga o espelhamento do histórico no stderr."""
        self.VERBOSO = bool(verboso)
