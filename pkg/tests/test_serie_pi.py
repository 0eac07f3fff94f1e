from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exato.erros import ErroGrau, ErroTermoDominante
from series.serie_pi import INF, SeriePi

# expoentes em (1/6)Z entre 0 e 3, coeficientes inteiros pequenos
expoentes = st.integers(0, 18).map(lambda n: Fraction(n, 6))
series = st.dictionaries(expoentes, st.integers(-4, 4), max_size=5).map(
    lambda termos: SeriePi(termos, trunc=Fraction(4)))


# ==============================================================
# TESTES - Construção e consultas
# ==============================================================

def test_construcao_descarta_zeros_e_excedentes():
    serie = SeriePi({0: 1, Fraction(1, 2): 0, 3: 5}, trunc=2)
    assert serie.itens() == [(Fraction(0), 1)]
    assert serie.trunc == 2


def test_coeficiente_alem_do_truncamento():
    serie = SeriePi({0: 1}, trunc=2)
    assert serie.coeficiente(1) == 0
    with pytest.raises(ValueError):
        serie.coeficiente(2)


def test_termo_dominante():
    serie = SeriePi({Fraction(1, 8): 2, Fraction(9, 8): 2}, trunc=3)
    assert serie.valuacao() == Fraction(1, 8)
    assert serie.termo_dominante() == (Fraction(1, 8), 2)
    with pytest.raises(ErroTermoDominante):
        SeriePi.zero(trunc=3).termo_dominante()


def test_verificar_nulidade():
    assert SeriePi.zero(trunc=5).verificar_nulidade() == (True, None)
    nula, testemunha = SeriePi({Fraction(7, 3): -1, 4: 1}, trunc=5).verificar_nulidade()
    assert not nula
    assert testemunha == (Fraction(7, 3), -1)


# ==============================================================
# TESTES - Aritmética
# ==============================================================

def test_truncamento_do_produto():
    a = SeriePi({Fraction(1, 8): 1}, trunc=3)
    b = SeriePi({0: 1, 1: 1}, trunc=2)
    produto = a * b
    # min(Ta + vb, Tb + va) = min(3, 2 + 1/8)
    assert produto.trunc == Fraction(17, 8)
    assert produto.itens() == [(Fraction(1, 8), 1), (Fraction(9, 8), 1)]


def test_produto_com_exata():
    exata = SeriePi({0: 1, 1: -1})
    geometrica = SeriePi({n: 1 for n in range(10)}, trunc=10)
    assert exata * geometrica == SeriePi({0: 1}, trunc=10)


def test_soma_de_graus_diferentes():
    a = SeriePi({0: 1}, trunc=2, grau=1)
    b = SeriePi({0: 1}, trunc=2, grau=0)
    with pytest.raises(ErroGrau):
        a + b
    # a série nula se adapta ao grau do outro termo
    assert (a + SeriePi.zero(trunc=2)).grau == 1


@settings(max_examples=40, deadline=None)
@given(series, series, series)
def test_anel(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(series, series)
def test_regra_de_leibniz(a, b):
    assert (a * b).q_ddq() == a.q_ddq() * b + a * b.q_ddq()


@settings(max_examples=30, deadline=None)
@given(series, series, st.integers(1, 3))
def test_escalar_q_multiplicativo(a, b, k):
    assert (a * b).escalar_q(k) == a.escalar_q(k) * b.escalar_q(k)


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(expoentes, st.integers(-4, 4), max_size=5))
def test_inversa(termos):
    termos[Fraction(0)] = 1
    a = SeriePi(termos, trunc=Fraction(4))
    inversa = a.inversa()
    assert a * inversa == SeriePi({0: 1}, trunc=inversa.trunc)


def test_inversa_fracionaria():
    # (2q^{1/8}(1 + q))⁻¹ = (1/2)q^{-1/8}(1 - q + q² - ...)
    a = SeriePi({Fraction(1, 8): 2, Fraction(9, 8): 2}, trunc=5)
    inversa = a.inversa()
    assert inversa.trunc == Fraction(5) - Fraction(1, 4)
    assert inversa.coeficiente(Fraction(-1, 8)) == Fraction(1, 2)
    assert inversa.coeficiente(Fraction(7, 8)) == Fraction(-1, 2)
    assert inversa.grau == 0


def test_particoes_pela_inversa():
    euler = SeriePi({0: 1, 1: -1, 2: -1, 5: 1, 7: 1}, trunc=8)
    particoes = euler.inversa()
    assert [particoes.coeficiente(n) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_potencias():
    a = SeriePi({0: 1, 1: 1}, trunc=4)
    assert a ** 3 == SeriePi({0: 1, 1: 3, 2: 3, 3: 1}, trunc=4)
    assert a ** 0 == 1
    assert a ** -1 == SeriePi({0: 1, 1: -1, 2: 1, 3: -1}, trunc=4)


# ==============================================================
# TESTES - Transformações
# ==============================================================

def test_q_ddq_e_escalar():
    a = SeriePi({0: 5, Fraction(1, 2): 2, 2: 1}, trunc=3)
    assert a.q_ddq() == SeriePi({Fraction(1, 2): 1, 2: 2}, trunc=3)
    escalada = a.escalar_q(2)
    assert escalada.trunc == 6
    assert escalada.coeficiente(1) == 2
    with pytest.raises(ValueError):
        a.escalar_q(0)


def test_graus_de_pi():
    a = SeriePi({0: 1}, trunc=2).vezes_pi(2)
    assert a.grau == 2
    assert (a * a.vezes_pi(-1)).grau == 3
    assert a.inversa().grau == -2


def test_vezes_q_e_truncar():
    a = SeriePi({0: 1, 1: 1}, trunc=3).vezes_q(Fraction(1, 8))
    assert a.trunc == Fraction(25, 8)
    assert a.truncar(1).itens() == [(Fraction(1, 8), 1)]
    assert SeriePi({0: 1}).truncar(INF).trunc == INF


def test_igualdade_no_truncamento_comum():
    assert SeriePi({0: 1, 5: 1}, trunc=10) == SeriePi({0: 1}, trunc=3)
    assert SeriePi({0: 1}, trunc=3) != SeriePi({0: 1, 1: 1}, trunc=3)


def test_texto():
    assert str(SeriePi({0: 1, 1: -24}, trunc=2)) == "( 1 - 24 * q + O(q^2) )"
    assert str(SeriePi({Fraction(1, 8): -2}, trunc=1, grau=1)) == "pi^1 * ( -2 * q^(1/8) + O(q^1) )"
    assert str(SeriePi.zero()) == "( 0 )"


# ==============================================================
# TESTES - Recomputação em truncamento maior
# ==============================================================

com_constante = st.dictionaries(expoentes, st.integers(-4, 4), max_size=5).map(
    lambda termos: {**termos, Fraction(0): termos.get(Fraction(0)) or 1})

OPERACOES = {
    "produto": lambda a, b: a * b,
    "inversa": lambda a, b: a.inversa(),
    "potencia": lambda a, b: a ** 3,
    "q_ddq": lambda a, b: a.q_ddq() * b,
}


@settings(max_examples=30, deadline=None)
@given(com_constante, com_constante, st.sampled_from([Fraction(1), Fraction(3, 2), Fraction(2)]))
def test_recalculo_em_truncamento_maior(ta, tb, t1):
    t2 = t1 + Fraction(3, 2)
    for nome, operacao in OPERACOES.items():
        curta = operacao(SeriePi(ta, trunc=t1), SeriePi(tb, trunc=t1))
        longa = operacao(SeriePi(ta, trunc=t2), SeriePi(tb, trunc=t2))
        assert longa.trunc >= curta.trunc, nome
        assert longa.truncar(curta.trunc).itens() == curta.itens(), nome
