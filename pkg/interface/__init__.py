from .nomes import ObjetoNomeado, interpretar_nome, construir_serie
from .linha_comando import main, criar_parser, tabela_coeficientes
