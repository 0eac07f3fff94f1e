import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exato.ciclotomico import (
    AcumuladorCiclotomico,
    CorpoCiclotomico,
    fase_racional,
    raiz_da_unidade,
    raiz_quadrada_inteira,
    unidade_imaginaria,
)
from exato.erros import ErroDivisaoPorZero, ErroOrdemCorpo, ErroRadicando

termos = st.lists(st.tuples(st.integers(0, 239), st.integers(-3, 3)), max_size=4)


def montar(corpo, pares):
    elemento = corpo.zero()
    for k, c in pares:
        elemento = elemento + corpo.zeta(k) * c
    return elemento


# ==============================================================
# TESTES - Axiomas de corpo
# ==============================================================

@settings(max_examples=30, deadline=None)
@given(termos, termos, termos)
def test_anel_comutativo(a, b, c):
    corpo = CorpoCiclotomico.de_ordem(240)
    x, y, z = montar(corpo, a), montar(corpo, b), montar(corpo, c)
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0


@settings(max_examples=20, deadline=None)
@given(termos)
def test_inverso(a):
    corpo = CorpoCiclotomico.de_ordem(240)
    x = montar(corpo, a)
    if not x:
        with pytest.raises(ErroDivisaoPorZero):
            x.inverso()
        return
    assert x * x.inverso() == 1


@settings(max_examples=20, deadline=None)
@given(termos)
def test_avaliacao_numerica_respeita_produto(a):
    corpo = CorpoCiclotomico.de_ordem(240)
    x = montar(corpo, a)
    assert abs((x * x).avaliar() - x.avaliar() ** 2) < 1e-7


def test_acumulador(corpo):
    a, b = corpo.zeta(3), corpo.zeta(100) + 2
    acumulador = AcumuladorCiclotomico(corpo)
    acumulador.adicionar_produto(a, b)
    acumulador.adicionar_produto(b, b)
    assert acumulador.resultado() == a * b + b * b


# ==============================================================
# TESTES - Raízes da unidade e radicais
# ==============================================================

def test_raizes_da_unidade(corpo):
    assert raiz_da_unidade(4, 2, corpo) == -1
    assert raiz_da_unidade(3, 3, corpo) == 1
    assert unidade_imaginaria(corpo) ** 2 == -1
    assert fase_racional(Fraction(1, 2), corpo) == -1
    assert fase_racional(Fraction(-1, 8), corpo) == raiz_da_unidade(8, 7, corpo)


def test_fase_avaliada(corpo):
    valor = fase_racional(Fraction(7, 20), corpo).avaliar()
    assert abs(valor - cmath.exp(2j * cmath.pi * 7 / 20)) < 1e-9


def test_raiz_ausente(corpo):
    with pytest.raises(ErroOrdemCorpo):
        raiz_da_unidade(7, 1, corpo)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_raiz_quadrada(corpo, n):
    r = raiz_quadrada_inteira(n, corpo)
    assert r * r == n
    assert abs(r.avaliar() - n ** 0.5) < 1e-9
    assert r.conjugado() == r


def test_radicando_nao_suportado(corpo):
    with pytest.raises(ErroRadicando):
        raiz_quadrada_inteira(7, corpo)


def test_racionais(corpo):
    x = corpo.elemento(Fraction(3, 4))
    assert x.eh_racional()
    assert x.valor_racional() == Fraction(3, 4)
    assert (x / 3) == Fraction(1, 4)
    assert not corpo.zeta(1).eh_racional()


def test_conjugado(corpo):
    z = corpo.zeta(17)
    assert z * z.conjugado() == 1


def test_texto(corpo):
    assert str(corpo.elemento(Fraction(-2, 3))) == "-2/3"
    assert str(unidade_imaginaria(corpo)) == "ζ4"
    assert str(corpo.zeta(24) * 2 - 1) == "-1 + 2*ζ10"


def test_corpo_compartilhado():
    assert CorpoCiclotomico.de_ordem(240) is CorpoCiclotomico.de_ordem(240)
    assert CorpoCiclotomico.de_ordem(240).grau == 64
