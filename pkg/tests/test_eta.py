from fractions import Fraction

import pytest

from eta.aritmetica import (
    FuncaoAritmetica,
    coeficiente_eta13_nivel8,
    coeficiente_eta_nivel8,
    kron8,
    sigma,
    soma_kron8,
    soma_kron8_complementar,
    t4_count,
)
from eta.eisenstein import eisenstein
from eta.produtos import QuocienteEta, pochhammer, serie_eta
from exato.erros import ErroDominio, ErroNomeSerie
from series.serie_pi import INF


# ==============================================================
# TESTES - Funções aritméticas
# ==============================================================

def test_sigma():
    assert [sigma(1, n) for n in range(1, 9)] == [1, 3, 4, 7, 6, 12, 8, 15]
    assert sigma(3, 2) == 9
    assert sigma(0, 12) == 6


def test_sigma_dominio():
    with pytest.raises(ErroDominio):
        sigma(1, 0)
    with pytest.raises(ErroDominio):
        sigma(-1, 4)


def test_kron8():
    assert [kron8(m) for m in range(1, 9)] == [1, 0, -1, 0, -1, 0, 1, 0]


def test_t4_igual_sigma_impar():
    assert t4_count(0) == 1
    assert t4_count(1) == 4
    for n in range(60):
        assert t4_count(n) == sigma(1, 2 * n + 1)


def test_somas_torcidas():
    assert soma_kron8(1) == 1
    assert soma_kron8(3) == -2
    assert soma_kron8(7) == 8
    assert soma_kron8_complementar(3) == 2
    assert coeficiente_eta_nivel8(1) == -2
    assert coeficiente_eta13_nivel8(1) == 2


def test_memorizacao():
    chamadas = []

    def regra(n):
        chamadas.append(n)
        return n * n

    quadrado = FuncaoAritmetica("quadrado", regra)
    assert quadrado(4) == 16
    assert quadrado(4) == 16
    assert chamadas == [4]
    assert quadrado.tabela(inicio=1, fim=3) == [1, 4, 9]
    quadrado.limpar()
    quadrado(4)
    assert chamadas == [4, 1, 2, 3, 4]


# ==============================================================
# TESTES - Produtos e quocientes eta
# ==============================================================

def test_pentagonal_de_euler(corpo):
    euler = pochhammer(1, 1, 16, corpo)
    esperado = {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1}
    assert euler.itens() == [(Fraction(e), c) for e, c in sorted(esperado.items())]


def test_particoes(corpo):
    particoes = pochhammer(1, -1, 10, corpo)
    assert [particoes.coeficiente(n) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_pochhammer_escalado(corpo):
    serie = pochhammer(3, 1, 10, corpo)
    assert serie.itens() == [(Fraction(0), 1), (Fraction(3), -1), (Fraction(6), -1)]
    with pytest.raises(ValueError):
        pochhammer(0, 1, 10, corpo)


def test_jacobi_cubo(corpo):
    # (q;q)³ = Σ (-1)^n (2n+1) q^{n(n+1)/2}
    cubo = pochhammer(1, 3, 11, corpo)
    assert cubo.itens() == [(Fraction(0), 1), (Fraction(1), -3), (Fraction(3), 5),
                            (Fraction(6), -7), (Fraction(10), 9)]


def test_quociente_de_texto():
    q = QuocienteEta.de_texto("1^2,2,4^3,8^-2")
    assert q.fatores == ((1, 2), (2, 1), (4, 3), (8, -2))
    assert q.expoente_dominante() == 0
    assert QuocienteEta.de_dict({5: -1, 1: 5}).expoente_dominante() == 0
    with pytest.raises(ValueError):
        QuocienteEta.de_texto("1^x")


def test_eta_termo_dominante(corpo):
    eta = serie_eta(QuocienteEta(((1, 1),)), 3, corpo)
    assert eta.termo_dominante() == (Fraction(1, 24), 1)
    assert eta.trunc == 3
    with pytest.raises(ValueError):
        serie_eta(QuocienteEta(((1, 1),)), INF, corpo)


def test_eta_nivel8_expansao(corpo):
    serie = serie_eta(QuocienteEta.de_texto("1^2,2,4^3,8^-2"), 20, corpo)
    for n in range(1, 20):
        assert serie.coeficiente(n) == coeficiente_eta_nivel8(n)


# ==============================================================
# TESTES - Eisenstein
# ==============================================================

def test_eisenstein_coeficientes(corpo):
    assert [eisenstein("E2", 5, corpo).coeficiente(n) for n in range(5)] == [1, -24, -72, -96, -168]
    assert [eisenstein("E4", 5, corpo).coeficiente(n) for n in range(5)] == [1, 240, 2160, 6720, 17520]
    assert [eisenstein("E6", 3, corpo).coeficiente(n) for n in range(3)] == [1, -504, -16632]


def test_eisenstein_desconhecida(corpo):
    with pytest.raises(ErroNomeSerie):
        eisenstein("E8", 5, corpo)


def test_e4_ao_quadrado_e_e8(corpo):
    # E₄² = E₈ = 1 + 480 Σ σ₇(n) qⁿ
    e4 = eisenstein("E4", 6, corpo)
    quadrado = e4 * e4
    for n in range(1, 6):
        assert quadrado.coeficiente(n) == 480 * sigma(7, n)
