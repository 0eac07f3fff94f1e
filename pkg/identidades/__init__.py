"""
Pacote de Identidades.

Registro de identidades entre funções teta, quocientes eta e séries de
Eisenstein, cada uma verificada exatamente até uma ordem em q e
acompanhada de um controle negativo perturbado.
"""
from .relatorio import RelatorioVerificacao, Testemunha, relatorios_para_json
from .fabrica import FabricaSeries
from .riccati import (
    EspecificacaoRiccati,
    FUNCOES_W,
    ODE_ETA_NIVEL6,
    RICCATI_NIVEL5,
    RICCATI_NIVEL6,
    RICCATI_NIVEL8,
)
from .verificacao import (
    Verificacao,
    VerificacaoAritmetica,
    VerificacaoConstanteRiccati,
    VerificacaoJato,
    VerificacaoRiccati,
    VerificacaoSerie,
)
from .registro import CARACTERISTICAS_REGISTRO, criar_registro
from .verificador import Verificador, run_all
