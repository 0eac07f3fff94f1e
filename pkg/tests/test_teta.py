from fractions import Fraction

import pytest

from config import Config
from exato.ciclotomico import fase_racional, raiz_da_unidade
from exato.erros import ErroOrdemCorpo
from series.serie_pi import SeriePi
from teta.caracteristica import Caracteristica, EspecificacaoTeta
from teta.funcao_teta import (
    constante_teta,
    jato_teta,
    produto_triplo,
    residuo_calor,
    teta_duas_linhas,
    teta_linha,
)

TRUNC = Fraction(6)

CARACTERISTICAS = [
    (0, 0), (0, 1), (1, 0), (1, 1), (1, "1/2"), (1, "3/2"), (1, "1/3"), (1, "2/3"),
    (1, "1/4"), (1, "7/4"), (1, "1/5"), (1, "9/5"), (0, 2), (1, -1), (2, 0), (0, "1/2"),
]


def car(e, el):
    return Caracteristica(Fraction(e), Fraction(el))


# ==============================================================
# TESTES - Características
# ==============================================================

def test_caracteristica_de_texto():
    c = Caracteristica.de_texto("1, 1/5")
    assert (c.eps, c.eps_linha) == (1, Fraction(1, 5))
    assert str(c) == "[1,1/5]"
    with pytest.raises(ValueError):
        Caracteristica.de_texto("1")


def test_caracteristica_fora_do_corpo():
    with pytest.raises(ErroOrdemCorpo):
        car(1, "1/7")


def test_ordem_das_fases():
    assert car(1, "1/5").ordem_das_fases() == 20
    assert car(1, "1/4").ordem_das_fases() == 16
    assert car(0, 0).ordem_das_fases() == 2


def test_especificacao_invalida():
    with pytest.raises(ValueError):
        EspecificacaoTeta(car(0, 0), escala_tau=0)
    with pytest.raises(ValueError):
        EspecificacaoTeta(car(0, 0), ordem_z=-1)


# ==============================================================
# TESTES - Constantes teta
# ==============================================================

def test_teta_00_e_10(corpo):
    t00 = constante_teta(car(0, 0), trunc=TRUNC, corpo=corpo)
    assert t00 == SeriePi({0: 1, Fraction(1, 2): 2, 2: 2, Fraction(9, 2): 2}, trunc=TRUNC)
    t10 = constante_teta(car(1, 0), trunc=TRUNC, corpo=corpo)
    assert t10 == SeriePi({Fraction(1, 8): 2, Fraction(9, 8): 2, Fraction(25, 8): 2}, trunc=TRUNC)


def test_teta_11_nula(corpo):
    assert constante_teta(car(1, 1), trunc=TRUNC, corpo=corpo).eh_nula()


def test_escala_em_tau(corpo):
    simples = constante_teta(car(0, 1), trunc=TRUNC, corpo=corpo)
    dupla = constante_teta(car(0, 1), escala_tau=2, trunc=2 * TRUNC, corpo=corpo)
    assert dupla == simples.escalar_q(2)


def test_termo_dominante_quintos(corpo):
    # θ[1,1/5] começa em q^{1/8} com coeficiente unitário de Q(ζ₂₀)
    e, c = constante_teta(car(1, "1/5"), trunc=TRUNC, corpo=corpo).termo_dominante()
    assert e == Fraction(1, 8)
    assert c == fase_racional(Fraction(1, 20), corpo) + fase_racional(Fraction(-1, 20), corpo)


@pytest.mark.parametrize("e, el", CARACTERISTICAS)
def test_soma_igual_produto_triplo(corpo, e, el):
    espec = EspecificacaoTeta(car(e, el), trunc=TRUNC)
    assert jato_teta(espec, corpo).coeficiente(0) == produto_triplo(espec, corpo).coeficiente(0)


@pytest.mark.parametrize("e, el", [(0, 0), (1, 0), (1, "1/3")])
def test_produto_triplo_em_2tau(corpo, e, el):
    espec = EspecificacaoTeta(car(e, el), escala_tau=2, trunc=TRUNC)
    assert jato_teta(espec, corpo).coeficiente(0) == produto_triplo(espec, corpo).coeficiente(0)


def test_produto_triplo_exige_constante(corpo):
    with pytest.raises(ValueError):
        produto_triplo(EspecificacaoTeta(car(0, 0), ordem_z=1, trunc=TRUNC), corpo)


# ==============================================================
# TESTES - Derivadas e jatos
# ==============================================================

def test_derivada_de_jacobi_termo_dominante(corpo):
    linha = teta_linha(car(1, 1), trunc=TRUNC, corpo=corpo)
    assert linha.grau == 1
    assert linha.termo_dominante() == (Fraction(1, 8), -2)


def test_paridade_das_derivadas(corpo):
    # θ[1,0] é par em z
    assert teta_linha(car(1, 0), trunc=TRUNC, corpo=corpo).eh_nula()
    assert teta_duas_linhas(car(1, 0), trunc=TRUNC, corpo=corpo).grau == 2


def test_jato_nega_caracteristica(corpo):
    c = car(1, "1/3")
    jato = jato_teta(EspecificacaoTeta(c, ordem_z=3, trunc=TRUNC), corpo)
    negado = jato_teta(EspecificacaoTeta(c.negar(), ordem_z=3, trunc=TRUNC), corpo)
    for k in range(4):
        sinal = -1 if k % 2 else 1
        assert negado.coeficiente(k) == jato.coeficiente(k) * sinal


def test_lei_de_deslocamento(corpo):
    c = car(1, "1/4")
    base = constante_teta(c, trunc=TRUNC, corpo=corpo)
    deslocada = constante_teta(c.deslocar(1, 1), trunc=TRUNC, corpo=corpo)
    assert deslocada == base * c.fator_deslocamento(1, corpo)
    assert c.fator_deslocamento(1, corpo) == -1
    assert car(Fraction(1, 2), 0).fator_deslocamento(1, corpo) == raiz_da_unidade(4, 1, corpo)


@pytest.mark.parametrize("e, el", [(0, 0), (1, 1), (1, "1/5"), (1, "3/4")])
def test_equacao_do_calor(corpo, e, el):
    residuo = residuo_calor(car(e, el), 4, TRUNC, corpo)
    assert residuo.grau_base == 2
    assert residuo.ordem_z == 2
    assert residuo.eh_nulo()


def test_equacao_do_calor_perturbada(corpo):
    assert not residuo_calor(car(0, 0), 2, TRUNC, corpo, fator_tempo=4).eh_nulo()


def test_calor_exige_ordem_2(corpo):
    with pytest.raises(ValueError):
        residuo_calor(car(0, 0), 1, TRUNC, corpo)


def test_corpo_maior(config_padrao):
    config_padrao.set_ordem_corpo(480)
    c = car(1, "1/5")
    assert c.ordem_das_fases() == 20
    assert Config().ORDEM_CORPO == 480
