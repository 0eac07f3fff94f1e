"""
Interface de Linha de Comando.

Subcomandos:
    verify   Executa o registro de identidades (ou parte dele).
    expand   Imprime a expansão de uma série nomeada.
    coeffs   Tabela CSV de funções aritméticas.

Códigos de saída:
    0  sucesso
    1  alguma verificação falhou (ou algum controle negativo passou)
    2  erro de configuração, id ou nome desconhecido, N < 0

Exemplos:
    $ python3 main.py verify --id 'riccati_level*' --order 20
    $ python3 main.py expand E4 --order 5
    $ python3 main.py coeffs t4 10
"""
import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction

from config import Config
from eta.aritmetica import sigma, soma_kron8, t4_count
from identidades.fabrica import FabricaSeries
from identidades.relatorio import relatorios_para_json
from identidades.verificador import Verificador
from interface.nomes import construir_serie, interpretar_nome
from utils.conversor import Conversor

logger = logging.getLogger(__name__)

SAIDA_OK = 0
SAIDA_FALHA = 1
SAIDA_CONFIGURACAO = 2


def _ordem(texto: str) -> Fraction:
    try:
        valor = Fraction(texto)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"ordem inválida: '{texto}' (use P ou P/R)")
    return valor


def criar_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="main.py",
        description="Verificação exata de identidades entre funções teta, quocientes eta e equações de Riccati.",
    )
    sub = parser.add_subparsers(dest="comando", required=True)

    verify = sub.add_parser("verify", help="executa verificações do registro")
    selecao = verify.add_mutually_exclusive_group()
    selecao.add_argument("--all", action="store_true", help="todas as verificações (padrão)")
    selecao.add_argument("--id", dest="padrao", help="glob de ids (ex.: 'level8_*')")
    verify.add_argument("--zorder", type=int, help="ordem K dos jatos em z")
    verify.add_argument("--negative-controls", action="store_true", dest="negativos",
                        help="executa as variantes perturbadas, que devem falhar")
    verify.add_argument("--out", help="arquivo de saída (padrão: stdout)")

    expand = sub.add_parser("expand", help="imprime a expansão de uma série nomeada")
    expand.add_argument("nome", help="theta:E,E'[@K] | eta:K^R,... | E2|E4|E6 | W5|W6|W8")
    expand.add_argument("--out", help="arquivo de saída (padrão: stdout)")

    for comando in (verify, expand):
        comando.add_argument("--order", type=_ordem, help="ordem em q (P ou P/R)")
        comando.add_argument("--field-order", type=int, dest="ordem_corpo", help="ordem M de Q(ζ_M)")
        comando.add_argument("--format", choices=("text", "json"), dest="formato")
        comando.add_argument("--verbose", action="store_true", help="log detalhado no stderr")

    coeffs = sub.add_parser("coeffs", help="tabela CSV de funções aritméticas")
    coeffs.add_argument("funcao", choices=("t4", "sigma1", "kron8_twist"))
    coeffs.add_argument("n_max", type=int)
    coeffs.add_argument("--out", help="arquivo de saída (padrão: stdout)")
    coeffs.add_argument("--verbose", action="store_true", help="log detalhado no stderr")
    return parser


def _configurar(args):
    """Aplica os argumentos à Config; propaga ValueError."""
    config = Config()
    config.set_verboso(args.verbose)
    if getattr(args, "order", None) is not None:
        config.set_ordem_q(args.order)
    if getattr(args, "zorder", None) is not None:
        config.set_ordem_z(args.zorder)
    if getattr(args, "ordem_corpo", None) is not None:
        config.set_ordem_corpo(args.ordem_corpo)
    if getattr(args, "formato", None) is not None:
        config.set_formato(args.formato)
    return config


def _escrever(texto: str, caminho: str = None):
    if caminho is None:
        sys.stdout.write(texto)
        return
    with open(caminho, "w", encoding="utf-8", newline="\n") as arquivo:
        arquivo.write(texto)
    logger.info("saída gravada em %s", caminho)


def comando_verify(args) -> int:
    """
    Executa as verificações selecionadas e escreve os relatórios.

    Returns:
        int: 0 se todas passaram (ou, com --negative-controls, se todas
             falharam com testemunha), 1 caso contrário.
    """
    config = Config()
    verificador = Verificador()
    relatorios = verificador.executar_todas(config.ORDEM_Q, config.ORDEM_Z, args.padrao, args.negativos)
    if config.FORMATO == "json":
        texto = relatorios_para_json(relatorios) + "\n"
    else:
        texto = "".join(r.para_texto() + "\n" for r in relatorios)
    _escrever(texto, args.out)

    if args.negativos:
        falsos_positivos = [r.id for r in relatorios if r.passou or r.testemunha is None]
        for id in falsos_positivos:
            logger.error("controle negativo sem testemunha: %s", id)
        return SAIDA_FALHA if falsos_positivos else SAIDA_OK
    reprovadas = [r.id for r in relatorios if not r.passou]
    if reprovadas:
        logger.error("%d verificações falharam: %s", len(reprovadas), ", ".join(reprovadas))
        return SAIDA_FALHA
    return SAIDA_OK


def comando_expand(args) -> int:
    """Imprime a série nomeada até a ordem configurada."""
    objeto = interpretar_nome(args.nome)
    serie = construir_serie(objeto, FabricaSeries())
    if Config().FORMATO == "json":
        texto = json.dumps(Conversor.serie_para_json(serie, objeto.texto), indent=2, ensure_ascii=False) + "\n"
    else:
        texto = f"{objeto.texto} = {Conversor.serie_para_texto(serie)}\n"
    _escrever(texto, args.out)
    return SAIDA_OK


def tabela_coeficientes(funcao: str, n_max: int) -> str:
    """
    Tabela CSV (cabeçalho, vírgulas, fim de linha LF).

    Raises:
        ValueError: Se n_max < 0.
    """
    if n_max < 0:
        raise ValueError(f"N deve ser >= 0 (recebido {n_max})")
    buffer = io.StringIO()
    escritor = csv.writer(buffer, lineterminator="\n")
    if funcao == "t4":
        escritor.writerow(["n", "t4", "sigma(2n+1)"])
        for n in range(n_max + 1):
            escritor.writerow([n, t4_count(n), sigma(1, 2 * n + 1)])
    elif funcao == "sigma1":
        escritor.writerow(["n", "sigma1"])
        for n in range(1, n_max + 1):
            escritor.writerow([n, sigma(1, n)])
    else:
        escritor.writerow(["n", "sum_d_kron8"])
        for n in range(1, n_max + 1):
            escritor.writerow([n, soma_kron8(n)])
    return buffer.getvalue()


def comando_coeffs(args) -> int:
    _escrever(tabela_coeficientes(args.funcao, args.n_max), args.out)
    return SAIDA_OK


COMANDOS = {
    "verify": comando_verify,
    "expand": comando_expand,
    "coeffs": comando_coeffs,
}


def main(argv: list = None) -> int:
    """
    Ponto de entrada da linha de comando.

    Args:
        argv (list): Argumentos (padrão: sys.argv[1:]).

    Returns:
        int: Código de saída (0, 1 ou 2).
    """
    args = criar_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        _configurar(args)
        return COMANDOS[args.comando](args)
    except ValueError as erro:
        sys.stderr.write(f"erro: {erro}\n")
        return SAIDA_CONFIGURACAO
