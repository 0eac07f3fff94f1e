import json
from fractions import Fraction

import pytest

from identidades.fabrica import FabricaSeries
from identidades.registro import CARACTERISTICAS_REGISTRO, criar_registro
from identidades.relatorio import RelatorioVerificacao, Testemunha, relatorios_para_json
from identidades.riccati import ODE_ETA_NIVEL6, RICCATI_NIVEL5, RICCATI_NIVEL6, RICCATI_NIVEL8
from identidades.verificacao import VerificacaoSerie
from identidades.verificador import Verificador, run_all
from series.serie_pi import SeriePi

ORDEM = Fraction(3)
REGISTRO = criar_registro()
IDS = [v.id for v in REGISTRO]


@pytest.fixture(scope="module")
def fabrica():
    return FabricaSeries(ordem_q=ORDEM, ordem_z=4)


@pytest.fixture
def limites_pequenos(config_padrao):
    config_padrao.set_limite_t4(30)
    config_padrao.set_limite_corolario(20)
    return config_padrao


# ==============================================================
# TESTES - Registro
# ==============================================================

def test_registro_ordenado_e_sem_repeticoes():
    assert IDS == sorted(IDS)
    assert len(set(IDS)) == len(IDS)


@pytest.mark.parametrize("id", [
    "jacobi_derivative", "jacobi_quartic", "farkas_kra_00_00", "farkas_kra_10_10",
    "jet_identity_halves", "jet_identity_fifths", "derivative_quarters_2",
    "level4_second_derivative", "t4_theorem", "level5_second_derivative",
    "level6_quartic", "level8_identity_3", "level8_eta_expansion", "level8_eta13_expansion",
    "riccati_level5", "riccati_level6", "riccati_level8", "eta_ode_level4", "eta_ode_level6",
    "ramanujan_e2", "ramanujan_e4", "ramanujan_e6", "eisenstein_riccati",
    "triple_product", "heat_equation", "shift_law", "parity",
])
def test_ids_registrados(id):
    assert id in IDS


def test_caracteristicas_do_registro_no_corpo():
    assert len(CARACTERISTICAS_REGISTRO) == 23
    for e, el in CARACTERISTICAS_REGISTRO:
        FabricaSeries.car(e, el)


# ==============================================================
# TESTES - Cada identidade e seu controle negativo
# ==============================================================

@pytest.mark.parametrize("verificacao", REGISTRO, ids=IDS)
def test_identidade_passa(verificacao, fabrica, limites_pequenos):
    relatorio = verificacao.executar(fabrica)
    assert relatorio.passou, relatorio.para_texto()
    assert relatorio.testemunha is None
    assert relatorio.diagnostico is None


@pytest.mark.parametrize("verificacao", REGISTRO, ids=IDS)
def test_controle_negativo_falha(verificacao, fabrica, limites_pequenos):
    relatorio = verificacao.executar(fabrica, perturbar=True)
    assert not relatorio.passou
    assert relatorio.testemunha is not None, relatorio.para_texto()
    assert relatorio.id == f"{verificacao.id}:perturbed"
    assert relatorio.testemunha.expoente < relatorio.ordem_q


def test_ordem_das_verificacoes_com_limite(fabrica, limites_pequenos):
    relatorio = dict(zip(IDS, REGISTRO))["t4_theorem"].executar(fabrica)
    assert relatorio.ordem_q == 31


def test_jatos_reportam_ordem_z(fabrica):
    relatorio = dict(zip(IDS, REGISTRO))["jet_identity_halves"].executar(fabrica)
    assert relatorio.ordem_z == 4


# ==============================================================
# TESTES - Riccati
# ==============================================================

@pytest.mark.parametrize("espec, raiz", [
    (RICCATI_NIVEL5, "11/2 + 5/2√5"),
    (RICCATI_NIVEL6, "9"),
    (RICCATI_NIVEL8, "3 + 2√2"),
])
def test_raiz_esperada_anula_o_polinomio(corpo, espec, raiz):
    w0 = espec.raiz_esperada(corpo)
    assert espec.avaliar_polinomio(w0) == 0
    assert espec.avaliar_polinomio(w0, perturbar=True) != 0
    assert espec.descrever_raiz() == raiz


def test_termo_constante_de_w(fabrica):
    for espec in (RICCATI_NIVEL5, RICCATI_NIVEL6, RICCATI_NIVEL8, ODE_ETA_NIVEL6):
        w0 = espec.construir_w(fabrica).coeficiente(0)
        assert w0 == espec.raiz_esperada(fabrica.corpo)


# ==============================================================
# TESTES - Relatórios e falhas de construção
# ==============================================================

def test_falha_de_construcao_vira_diagnostico(fabrica):
    def construtor(f, p):
        return [SeriePi({0: 1}, 3, 0) + SeriePi({0: 1}, 3, 1)]

    relatorio = VerificacaoSerie("quebrada", "grau misturado", "nenhuma", construtor).executar(fabrica)
    assert not relatorio.passou
    assert relatorio.testemunha is None
    assert relatorio.diagnostico.startswith("ErroGrau")


def test_json_estavel():
    relatorios = [
        RelatorioVerificacao("a", "x = x", Fraction(30), None, True, None, 5),
        RelatorioVerificacao("b:perturbed", "θ = θ", Fraction(61, 2), 4, False,
                             Testemunha(Fraction(1, 8), "-2", 1), 12),
    ]
    texto = relatorios_para_json(relatorios)
    dados = json.loads(texto)
    assert json.dumps(dados, indent=2, ensure_ascii=False) == texto
    assert list(dados[0]) == ["id", "statement", "qOrder", "zOrder", "pass", "witness", "millis", "diagnostic"]
    assert dados[1]["qOrder"] == "61/2"
    assert dados[1]["witness"] == {"exponent": "1/8", "coefficient": "-2", "zDegree": 1}


def test_texto_do_relatorio():
    relatorio = RelatorioVerificacao("b", "θ = θ", Fraction(3), None, False, Testemunha(Fraction(1, 2), "4"), 7)
    assert relatorio.para_texto().splitlines() == ["FAIL  b  q3  7 ms", "    testemunha: 4 * q^(1/2)"]


# ==============================================================
# TESTES - Verificador
# ==============================================================

def test_selecao_por_glob():
    verificador = Verificador()
    assert [v.id for v in verificador.selecionar("level8_identity_*")] == [
        "level8_identity_1", "level8_identity_2", "level8_identity_3"]
    assert len(verificador.selecionar()) == len(IDS)
    with pytest.raises(ValueError):
        verificador.selecionar("nao_existe")
    with pytest.raises(KeyError):
        verificador.buscar("nao_existe")


def test_executar_todas_ordena_e_registra_historico(config_padrao):
    config_padrao.set_max_threads(4)
    verificador = Verificador()
    relatorios = verificador.executar_todas(ordem_q=2, padrao="ramanujan_*")
    assert [r.id for r in relatorios] == ["ramanujan_e2", "ramanujan_e4", "ramanujan_e6"]
    assert all(r.passou for r in relatorios)
    historico = verificador.get_historico()
    assert historico[0].startswith("VERIFICAÇÃO: 3 identidades")
    assert "3/3 aprovadas" in historico[-1]
    verificador.limpar_historico()
    assert verificador.get_historico() == []


def test_run_all_controles_negativos():
    relatorios = run_all(ordem_q=2, padrao="jacobi_*", negativos=True)
    assert [r.id for r in relatorios] == ["jacobi_derivative:perturbed", "jacobi_quartic:perturbed"]
    assert not any(r.passou for r in relatorios)


# ==============================================================
# TESTES - Ordem verificada e resíduos curtos
# ==============================================================

def test_residuo_curto_falha_com_diagnostico():
    curta = VerificacaoSerie("curta", "0 = 0", "nenhuma", lambda f, p: [SeriePi.zero(trunc=1)])
    relatorio = curta.executar(FabricaSeries(ordem_q=30))
    assert not relatorio.passou
    assert relatorio.ordem_q == 30
    assert relatorio.testemunha is None
    assert "q^1," in relatorio.diagnostico


def test_residuo_curto_remontado_com_margem_maior():
    # conhecido só até trunc - 3: curto com a margem padrão, completo com a ampliada
    verificacao = VerificacaoSerie("margem", "0 = 0", "nenhuma",
                                   lambda f, p: [SeriePi.zero(trunc=f.trunc - 3)])
    relatorio = verificacao.executar(FabricaSeries(ordem_q=10))
    assert relatorio.passou
    assert relatorio.ordem_q == 10


def test_testemunha_abaixo_do_truncamento_curto():
    verificacao = VerificacaoSerie("curta", "0 = 0", "nenhuma",
                                   lambda f, p: [SeriePi({Fraction(1, 2): 3}, trunc=1)])
    relatorio = verificacao.executar(FabricaSeries(ordem_q=30))
    assert not relatorio.passou
    assert relatorio.diagnostico is None
    assert relatorio.testemunha.expoente == Fraction(1, 2)


def test_serie_teta_de_t4_cobre_o_limite(limites_pequenos):
    verificacao = dict(zip(IDS, REGISTRO))["t4_theta_series"]
    fabrica = FabricaSeries(ordem_q=5)
    residuo, = verificacao.residuos(fabrica)
    # q^{2n+1} para n = 0..30
    assert residuo.trunc == 62
    relatorio = verificacao.executar(fabrica)
    assert relatorio.passou
    assert relatorio.ordem_q == 62


# ==============================================================
# TESTES - Ordens de aceitação e estabilidade
# ==============================================================

def test_registro_completo_na_ordem_30():
    relatorios = run_all(ordem_q=30)
    assert len(relatorios) == len(IDS)
    assert [r.id for r in relatorios if not r.passou] == []


def test_riccati_e_edos_eta_na_ordem_40():
    relatorios = run_all(ordem_q=40, padrao="riccati_*") + run_all(ordem_q=40, padrao="eta_ode_*")
    assert len(relatorios) == 9
    assert all(r.passou for r in relatorios)
    assert all(r.ordem_q == 40 for r in relatorios if not r.id.endswith("_constant"))


def test_resultados_estaveis_entre_ordens(limites_pequenos):
    curtos = run_all(ordem_q=10)
    longos = run_all(ordem_q=20)
    assert [(r.id, r.passou) for r in curtos] == [(r.id, r.passou) for r in longos]
    # um controle que falha em q^10 falha em q^20 com a mesma testemunha
    controles_curtos = run_all(ordem_q=10, negativos=True)
    controles_longos = run_all(ordem_q=20, negativos=True)
    assert [r.id for r in controles_curtos] == [r.id for r in controles_longos]
    for curto, longo in zip(controles_curtos, controles_longos):
        if curto.testemunha is not None:
            assert longo.testemunha == curto.testemunha


@pytest.mark.parametrize("id", ["jacobi_quartic", "level5_eta_product", "level8_identity_1", "riccati_level6"])
def test_residuos_estaveis_entre_ordens(id):
    verificacao = dict(zip(IDS, REGISTRO))[id]
    curtos = verificacao.residuos(FabricaSeries(ordem_q=10), perturbar=True)
    longos = verificacao.residuos(FabricaSeries(ordem_q=20), perturbar=True)
    for curto, longo in zip(curtos, longos):
        assert longo.trunc > curto.trunc
        assert longo.truncar(curto.trunc).itens() == curto.itens()
