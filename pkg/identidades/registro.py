"""
Registro de Verificações.

Cada entrada é uma identidade entre funções teta, quocientes eta ou
séries de Eisenstein, escrita como lista de resíduos que devem ser
nulos. Quocientes são verificados após eliminar denominadores sempre
que possível; W das equações de Riccati usa a inversa de séries.

Notação dos construtores: f é a FabricaSeries, p indica a variante
perturbada, a e b são as duas constantes teta de cada nível e θ' é
θ'[1,1].

Funções:
    criar_registro: Lista completa de verificações, ordenada por id.
    CARACTERISTICAS_REGISTRO: Características usadas pelas identidades.
"""
from fractions import Fraction

from config import Config
from eta.aritmetica import (
    coeficiente_eta13_nivel8,
    coeficiente_eta_nivel8,
    sigma,
    soma_kron8_complementar,
    t4_count,
)
from eta.produtos import QuocienteEta, serie_eta
from exato.ciclotomico import raiz_quadrada_inteira, unidade_imaginaria
from series.jato_z import JatoZ
from series.serie_pi import SeriePi
from teta.funcao_teta import constante_teta, residuo_calor
from identidades.riccati import ODE_ETA_NIVEL6, RICCATI_NIVEL5, RICCATI_NIVEL6, RICCATI_NIVEL8
from identidades.verificacao import (
    VerificacaoAritmetica,
    VerificacaoConstanteRiccati,
    VerificacaoJato,
    VerificacaoRiccati,
    VerificacaoSerie,
)

# Pares (ε, ε') que aparecem nas identidades, incluídos os gerados pelo
# lema do produto em 2τ.
CARACTERISTICAS_REGISTRO = (
    (0, 0), (0, 1), (1, 0), (1, 1),
    (1, "1/2"), (1, "3/2"),
    (1, "1/3"), (1, "2/3"), (1, "4/3"), (1, "5/3"),
    (1, "1/4"), (1, "3/4"), (1, "5/4"), (1, "7/4"),
    (1, "1/5"), (1, "3/5"), (1, "7/5"), (1, "9/5"),
    (0, 2), (1, 2), (0, -1), (1, -1), (2, 0),
)

# características avaliadas também em 2τ
CARACTERISTICAS_2TAU = ((0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (1, 2), (0, -1), (1, -1), (2, 0))

# pares do lema do produto: ([ε, ε'], [δ, δ'])
PARES_PRODUTO = {
    "farkas_kra_00_00": ((0, 0), (0, 0)),
    "farkas_kra_00_01": ((0, 0), (0, 1)),
    "farkas_kra_01_01": ((0, 1), (0, 1)),
    "farkas_kra_10_10": ((1, 0), (1, 0)),
}


def _pi(serie: SeriePi, k: int = 1) -> SeriePi:
    return serie.vezes_pi(k)


def _sinal(p: bool) -> int:
    return -1 if p else 1


def _tl(f) -> SeriePi:
    """θ'[1,1]."""
    return f.linha(1, 1)


# ----------------------------------------------------------------------
# fórmula de Jacobi e identidades básicas
# ----------------------------------------------------------------------
def _derivada_jacobi(f, p):
    produto = f.teta(0, 0) * f.teta(1, 0) * f.teta(0, 1)
    return [_tl(f) + _pi(produto) * _sinal(p)]


def _quartica_jacobi(f, p):
    return [f.teta(0, 0) ** 4 - f.teta(0, 1) ** 4 * _sinal(p) - f.teta(1, 0) ** 4]


def _produto_derivada(f, p):
    # θ'[1,1] = -2π q^{1/8} (q;q)³
    cubo = f.produto_q({1: 3}).vezes_q(Fraction(1, 8))
    return [_tl(f) + _pi(cubo) * (1 if p else 2)]


def _lema_produto(pares):
    (e, el), (d, dl) = pares

    def construtor(f, p):
        e_, el_, d_, dl_ = (Fraction(x) for x in (e, el, d, dl))
        desvio = 1 if p else 0
        esquerda = f.teta(e_, el_) * f.teta(d_, dl_)
        primeiro = (f.teta((e_ + d_) / 2, el_ + dl_ + desvio, 2)
                    * f.teta((e_ - d_) / 2, el_ - dl_, 2))
        segundo = (f.teta((e_ + d_) / 2 + 1, el_ + dl_, 2)
                   * f.teta((e_ - d_) / 2 + 1, el_ - dl_, 2))
        return [esquerda - primeiro - segundo]

    return construtor


# ----------------------------------------------------------------------
# estrutura das funções teta
# ----------------------------------------------------------------------
def _produto_triplo(f, p):
    residuos = []
    desvio = 1 if p else 0
    for e, el in CARACTERISTICAS_REGISTRO:
        residuos.append(f.teta(e, el) - f.produto_triplo(e, Fraction(el) + desvio))
    for e, el in CARACTERISTICAS_2TAU:
        residuos.append(f.teta(e, el, 2) - f.produto_triplo(e, Fraction(el) + desvio, 2))
    return residuos


def _equacao_calor(f, p):
    fator = 4 if p else 8
    return [residuo_calor(f.car(e, el), f.ordem_z, f.trunc, f.corpo, fator)
            for e, el in CARACTERISTICAS_REGISTRO]


def _lei_deslocamento(f, p):
    residuos = []
    for e, el in CARACTERISTICAS_REGISTRO:
        car = f.car(e, el)
        base = f.teta(car.eps, car.eps_linha)
        for m in (-1, 0, 1):
            for n in (-1, 0, 1):
                deslocada = car.deslocar(m, n)
                fator = 1 if p else car.fator_deslocamento(n, f.corpo)
                residuos.append(f.teta(deslocada.eps, deslocada.eps_linha) - base * fator)
    return residuos


def _paridade(f, p):
    residuos = []
    for e, el in CARACTERISTICAS_REGISTRO:
        car = f.car(e, el)
        jato = f.jato(car.eps, car.eps_linha)
        negado = f.jato(-car.eps, -car.eps_linha)
        refletido = JatoZ([c if p or k % 2 == 0 else -c for k, c in enumerate(jato.coefs)], jato.grau_base)
        residuos.append(negado - refletido)
    return residuos


# ----------------------------------------------------------------------
# identidades em (z, τ)
# ----------------------------------------------------------------------
def _jato_meios(f, p):
    a, b = f.teta(1, 0), f.teta(1, "1/2")
    j10, j1m, j3m, j11 = f.jato(1, 0), f.jato(1, "1/2"), f.jato(1, "3/2"), f.jato(1, 1)
    return [j10 * j10 * (b * b) + j1m * j3m * (a * a) - j11 * j11 * (b * b) * _sinal(p)]


def _jato_quociente(terco_a, terco_b, conjugado_a, conjugado_b, x):
    """b²·J_a·J_{a*} - a²·J_b·J_{b*} + X·J11²."""

    def construtor(f, p):
        a, b = f.teta(1, terco_a), f.teta(1, terco_b)
        ja, jas = f.jato(1, terco_a), f.jato(1, conjugado_a)
        jb, jbs = f.jato(1, terco_b), f.jato(1, conjugado_b)
        j11 = f.jato(1, 1)
        return [ja * jas * (b * b) - jb * jbs * (a * a) + j11 * j11 * x(f) * _sinal(p)]

    return construtor


def _rota_jato(ca, cb, x, nivel4=False):
    """Coeficiente de z² da identidade em z escrito com constantes teta."""

    def construtor(f, p):
        a, b = f.teta(*ca), f.teta(*cb)
        da, db = f.linha(*ca), f.linha(*cb)
        dda, ddb = f.duas_linhas(*ca), f.duas_linhas(*cb)
        termo_x = _tl(f) ** 2 * x(f) * _sinal(p)
        if nivel4:
            return [(a * dda + da * da) * (b * b) - (b * ddb - db * db) * (a * a) - termo_x]
        return [-(a * dda - da * da) * (b * b) + (b * ddb - db * db) * (a * a) + termo_x]

    return construtor


# ----------------------------------------------------------------------
# fórmulas de derivadas
# ----------------------------------------------------------------------
def _derivada_meio(f, p):
    b = f.teta(1, "1/2")
    return [f.linha(1, "1/2") + _pi(f.teta(0, 0, 2) ** 2 * b) * (2 if p else 1)]


def _derivada_tercos(segunda: bool):
    def construtor(f, p):
        a, b, t10 = f.teta(1, "1/3"), f.teta(1, "2/3"), f.teta(1, 0)
        tl = _tl(f)
        if not segunda:
            return [f.linha(1, "1/3") * t10 * b ** 3 * 6 - tl * (a ** 4 - b ** 4 * (1 if p else 3))]
        return [f.linha(1, "2/3") * t10 * a * b * b * (2 if p else 3) - tl * a ** 4]

    return construtor


def _derivada_quartos(segunda: bool):
    def construtor(f, p):
        a, b = f.teta(1, "1/4"), f.teta(1, "3/4")
        t00, t01 = f.teta(0, 0, 2) ** 2, f.teta(0, 1, 2) ** 2
        if not segunda:
            return [f.linha(1, "1/4") * a * 2 + _pi(t00 * a * a - t01 * b * b * _sinal(p))]
        return [f.linha(1, "3/4") * b * 2 + _pi(-t00 * b * b + t01 * a * a * _sinal(p))]

    return construtor


def _derivada_quintos(segunda: bool):
    def construtor(f, p):
        a, b = f.teta(1, "1/5"), f.teta(1, "3/5")
        tl = _tl(f)
        cubos = a ** 3 * b ** 3 * 10
        a5, b5 = a ** 5, b ** 5
        if not segunda:
            polinomio = a5 * 3 - b5 if p else a5 - b5 * 3
            return [f.linha(1, "1/5") * cubos - tl * a * polinomio]
        polinomio = a5 + b5 * 3 if p else a5 * 3 + b5
        return [f.linha(1, "3/5") * cubos - tl * b * polinomio]

    return construtor


# ----------------------------------------------------------------------
# nível 4
# ----------------------------------------------------------------------
def _cruzado(f, ca, cb):
    """b·θ''_a - a·θ''_b."""
    return f.duas_linhas(*ca) * f.teta(*cb) - f.duas_linhas(*cb) * f.teta(*ca)


def _segunda_derivada_nivel4(f, p):
    a, b = f.teta(1, 0), f.teta(1, "1/2")
    termo = _pi(f.teta(1, 0, 2) ** 4 * a * b, 2) * (2 if p else 1)
    return [_cruzado(f, (1, 0), (1, "1/2")) + termo]


def _serie_sigma_impar(f) -> SeriePi:
    """Σ σ(2n+1) q^{2n+1}."""
    termos = {}
    n = 1
    while n < f.trunc:
        termos[n] = sigma(1, n)
        n += 2
    return SeriePi(termos, f.trunc, 0, f.corpo)


def _sigma_racional(x: Fraction) -> int:
    return sigma(1, int(x)) if x.denominator == 1 else 0


def _soma_divisores_nivel4(f, p):
    a, b = f.teta(1, 0), f.teta(1, "1/2")
    termo = _pi(_serie_sigma_impar(f) * a * b, 2) * (8 if p else 16)
    rearranjo = {}
    n = 1
    while n < f.ordem_q:
        N = Fraction(n)
        esquerda = 2 * sigma(1, n) - 6 * _sigma_racional(N / 2) + 4 * _sigma_racional(N / 4)
        direita = 2 * sigma(1, n) if n % 2 else 0
        if esquerda != direita:
            rearranjo[n] = esquerda - direita
        n += 1
    return [_cruzado(f, (1, 0), (1, "1/2")) + termo,
            SeriePi(rearranjo, f.ordem_q, 0, f.corpo)]


def _serie_t4(f, limite: int) -> SeriePi:
    """16·q·Σ_{n ≤ limite} t₄(n) q^{2n}, truncada em q^{2·limite+2}."""
    termos = {2 * n + 1: 16 * t4_count(n) for n in range(limite + 1)}
    return SeriePi(termos, 2 * limite + 2, 0, f.corpo)


def _t4_teta(f, p):
    # truncamento próprio: cobre n = 0..LIMITE_T4 qualquer que seja ORDEM_Q
    limite = Config().LIMITE_T4
    teta = constante_teta(f.car(1, 0), escala_tau=2, trunc=Fraction(2 * limite + 2), corpo=f.corpo)
    serie = _serie_t4(f, limite)
    return [teta ** 4 - (serie * Fraction(1, 2) if p else serie)]


def _ode_eta_nivel4(f, p):
    serie = f.produto_q({1: -2, 2: 3, 4: -1})
    direita = f.produto_q({1: -2, 2: -1, 4: 7}).vezes_q(1)
    return [serie.q_ddq() - direita * (1 if p else 2)]


def _razao_nivel4(f, p):
    fator = 1 if p else raiz_quadrada_inteira(2, f.corpo)
    return [f.teta(1, 0) - f.produto_q({1: -2, 2: 3, 4: -1}) * f.teta(1, "1/2") * fator]


def _produto_eta_nivel4(f, p):
    r2 = raiz_quadrada_inteira(2, f.corpo)
    g = f.produto_q({1: -2, 2: -1, 4: 7}).vezes_q(1)
    return [f.teta(1, 0, 2) ** 4 * f.teta(1, 0) - g * f.teta(1, "1/2") * r2 * (8 if p else 16)]


# ----------------------------------------------------------------------
# nível 5
# ----------------------------------------------------------------------
def _segunda_derivada_nivel5(f, p):
    a, b = f.teta(1, "1/5"), f.teta(1, "3/5")
    A, B = a ** 5, b ** 5
    polinomio = A * A * (-8) + A * B * (80 if p else 88) + B * B * 8
    return [(a * b) ** 5 * _cruzado(f, (1, "1/5"), (1, "3/5")) * 100 - _tl(f) ** 2 * polinomio]


def _produto_eta_nivel5(f, p):
    r5 = raiz_quadrada_inteira(5, f.corpo)
    a, b = f.teta(1, "1/5"), f.teta(1, "3/5")
    direita = _pi(a * b * f.produto_q({1: 5, 5: -1}), 2) * (8 if p else 4)
    return [_tl(f) ** 2 * r5 - direita]


# ----------------------------------------------------------------------
# nível 6
# ----------------------------------------------------------------------
def _quartica_nivel6(f, p):
    a, b, t10 = f.teta(1, "1/3"), f.teta(1, "2/3"), f.teta(1, 0)
    return [t10 ** 3 * b - a ** 4 + b ** 4 * _sinal(p)]


def _segunda_derivada_nivel6(forma: int):
    def construtor(f, p):
        a, b, t10 = f.teta(1, "1/3"), f.teta(1, "2/3"), f.teta(1, 0)
        cruzado = _cruzado(f, (1, "1/3"), (1, "2/3"))
        tl2 = _tl(f) ** 2
        a4, b4 = a ** 4, b ** 4
        if forma == 1:
            polinomio = a4 * a4 - a4 * b4 * (9 if p else 10) + b4 * b4 * 9
            return [cruzado * t10 ** 2 * a * b ** 5 * 12 + tl2 * polinomio]
        return [cruzado * a * b4 * 12 + tl2 * t10 * (a4 - b4 * (8 if p else 9))]

    return construtor


def _fatoracao_nivel6(f, p):
    a, b, t10 = f.teta(1, "1/3"), f.teta(1, "2/3"), f.teta(1, 0)
    a4, b4 = a ** 4, b ** 4
    return [a4 * a4 - a4 * b4 * 10 + b4 * b4 * 9 - t10 ** 3 * b * (a4 - b4 * (8 if p else 9))]


def _produto_eta_nivel6(f, p):
    a, b, t10 = f.teta(1, "1/3"), f.teta(1, "2/3"), f.teta(1, 0)
    h = f.produto_q({1: 2, 2: -1, 3: 2, 6: -1})
    direita = _pi(t10 ** 2 * b ** 2 * h ** 2, 2) * (6 if p else 3)
    return [_tl(f) ** 2 * a ** 2 - direita]


def _riccati_forma_eta_nivel6(f, p):
    w = RICCATI_NIVEL6.construir_w(f)
    g = f.produto_q({1: -2, 2: 1, 3: 2, 6: -1})
    return [w - g ** 4 * (3 if p else 9)]


# ----------------------------------------------------------------------
# nível 8
# ----------------------------------------------------------------------
def _constantes_nivel8(f):
    return f.teta(1, "1/4"), f.teta(1, "3/4"), f.teta(1, 0), f.teta(1, "1/2")


def _identidade_nivel8(i: int):
    def construtor(f, p):
        a, b, t10, t1m = _constantes_nivel8(f)
        s = _sinal(p)
        if i == 1:
            return [t10 * t1m ** 3 - a * b ** 3 - b * a ** 3 * s]
        if i == 2:
            return [t10 ** 2 * a * b - a * a * t1m ** 2 + t1m ** 2 * b * b * s]
        return [a ** 4 - b ** 4 - t1m * t10 ** 3 * s]

    return construtor


def _segunda_derivada_nivel8(f, p):
    a, b, t10, t1m = _constantes_nivel8(f)
    a2, b2 = a * a, b * b
    cruzado = _cruzado(f, (1, "1/4"), (1, "3/4"))
    polinomio = a2 * a2 - a2 * b2 * (5 if p else 6) + b2 * b2
    return [cruzado * (a * b) ** 3 * 8 + _tl(f) ** 2 * t10 * t1m * polinomio]


def _relacao_intermediaria_nivel8(f, p):
    a, b, t10, t1m = _constantes_nivel8(f)
    tl2 = _tl(f) ** 2
    cruzado = _cruzado(f, (1, "1/4"), (1, "3/4"))
    return [cruzado * (a * b) ** 5 * 8 + tl2 * t10 ** 3 * t1m ** 7
            - tl2 * t10 * t1m * (a * b) ** 4 * (4 if p else 8)]


def _produto_eta_nivel8(f, p):
    a, b, t10, t1m = _constantes_nivel8(f)
    r2 = raiz_quadrada_inteira(2, f.corpo)
    k = f.eta({1: 2, 2: 1, 4: 3, 8: -2})
    direita = _pi((a * b) ** 2 * k, 2) * r2 * (8 if p else 4)
    return [_tl(f) ** 2 * t10 * t1m - direita]


def _produto_eta13_nivel8(f, p):
    a, b, t10, t1m = _constantes_nivel8(f)
    r2 = raiz_quadrada_inteira(2, f.corpo)
    l = f.eta({1: -2, 2: -1, 4: 13, 8: -6})
    direita = _pi((a * b) ** 6 * l, 2) * r2 * (16 if p else 32)
    return [_tl(f) ** 2 * t10 ** 3 * t1m ** 7 - direita]


def _expansao(fatores: dict, coeficiente):
    def construtor(f, p):
        trunc = Config().LIMITE_COROLARIO + 1
        serie = serie_eta(QuocienteEta.de_dict(fatores), trunc, f.corpo)
        termos = {0: 1}
        for n in range(1, trunc):
            termos[n] = coeficiente(n) // (2 if p else 1)
        return [serie - SeriePi(termos, trunc, 0, f.corpo)]

    return construtor


def _diferenca_expansoes(f, p):
    trunc = Config().LIMITE_COROLARIO + 1
    k = serie_eta(QuocienteEta.de_dict({1: 2, 2: 1, 4: 3, 8: -2}), trunc, f.corpo)
    l = serie_eta(QuocienteEta.de_dict({1: -2, 2: -1, 4: 13, 8: -6}), trunc, f.corpo)
    termos = {n: (2 if p else 4) * soma_kron8_complementar(n) for n in range(1, trunc)}
    return [l - k - SeriePi(termos, trunc, 0, f.corpo)]


# ----------------------------------------------------------------------
# Eisenstein
# ----------------------------------------------------------------------
def _ramanujan(nome: str):
    def construtor(f, p):
        e2, e4, e6 = f.eisenstein("E2"), f.eisenstein("E4"), f.eisenstein("E6")
        if nome == "E2":
            return [e2.q_ddq() * (6 if p else 12) - (e2 * e2 - e4)]
        if nome == "E4":
            return [e4.q_ddq() * (2 if p else 3) - (e2 * e4 - e6)]
        return [e6.q_ddq() * (1 if p else 2) - (e2 * e6 - e4 * e4)]

    return construtor


def _riccati_eisenstein(f, p):
    # (6/(πi))·u' + u² = E₄ com u = -E₂ e u' = 2πi·q du/dq
    i = unidade_imaginaria(f.corpo)
    u = -f.eisenstein("E2")
    derivada = _pi(u.q_ddq() * i * 2)
    termo = _pi(derivada * i.inverso() * (3 if p else 6), -1)
    return [termo + u * u - f.eisenstein("E4")]


# ----------------------------------------------------------------------
# registro
# ----------------------------------------------------------------------
def criar_registro() -> list:
    """
    Monta a lista de verificações.

    Returns:
        list: Instâncias de Verificacao ordenadas por id.
    """
    um_meio = "θ[1,1/2]"
    registro = [
        VerificacaoSerie("jacobi_derivative", "θ'[1,1] = -π θ[0,0] θ[1,0] θ[0,1]",
                         "sinal do produto trocado", _derivada_jacobi),
        VerificacaoSerie("jacobi_quartic", "θ⁴[0,0] = θ⁴[0,1] + θ⁴[1,0]",
                         "sinal de θ⁴[0,1] trocado", _quartica_jacobi),
        VerificacaoSerie("theta_derivative_product", "θ'[1,1] = -2π q^{1/8} (q;q)³",
                         "2π trocado por π", _produto_derivada),
        VerificacaoSerie("triple_product", "soma = produto triplo para todas as características do registro",
                         "ε' deslocado de 1 no produto", _produto_triplo),
        VerificacaoJato("heat_equation", "∂²θ/∂z² = 4πi ∂θ/∂τ para todas as características do registro",
                        "8π² trocado por 4π²", _equacao_calor),
        VerificacaoSerie("shift_law", "θ[ε+2m, ε'+2n](0) = e^{πiεn} θ[ε, ε'](0), m, n ∈ {-1, 0, 1}",
                         "fator e^{πiεn} omitido", _lei_deslocamento),
        VerificacaoJato("parity", "θ[-ε, -ε'](z) = θ[ε, ε'](-z)",
                        "reflexão z ↦ -z omitida", _paridade),
        VerificacaoJato("jet_identity_halves",
                        f"θ²{um_meio}θ²[1,0](z) + θ²[1,0]θ{um_meio}(z)θ[1,3/2](z) = θ²{um_meio}θ²[1,1](z)",
                        "sinal do termo em θ²[1,1](z) trocado", _jato_meios),
        VerificacaoJato("jet_identity_thirds",
                        "θ²[1,2/3]θ[1,1/3](z)θ[1,5/3](z) - θ²[1,1/3]θ[1,2/3](z)θ[1,4/3](z) "
                        "+ θ[1,0]θ[1,2/3]θ²[1,1](z) = 0",
                        "sinal do termo em θ²[1,1](z) trocado",
                        _jato_quociente("1/3", "2/3", "5/3", "4/3", lambda f: f.teta(1, 0) * f.teta(1, "2/3"))),
        VerificacaoJato("jet_identity_quarters",
                        "θ²[1,3/4]θ[1,1/4](z)θ[1,7/4](z) - θ²[1,1/4]θ[1,3/4](z)θ[1,5/4](z) "
                        "+ θ[1,0]θ[1,1/2]θ²[1,1](z) = 0",
                        "sinal do termo em θ²[1,1](z) trocado",
                        _jato_quociente("1/4", "3/4", "7/4", "5/4", lambda f: f.teta(1, 0) * f.teta(1, "1/2"))),
        VerificacaoJato("jet_identity_fifths",
                        "θ²[1,3/5]θ[1,1/5](z)θ[1,9/5](z) - θ²[1,1/5]θ[1,3/5](z)θ[1,7/5](z) "
                        "+ θ[1,1/5]θ[1,3/5]θ²[1,1](z) = 0",
                        "sinal do termo em θ²[1,1](z) trocado",
                        _jato_quociente("1/5", "3/5", "9/5", "7/5", lambda f: f.teta(1, "1/5") * f.teta(1, "3/5"))),
        VerificacaoSerie("jet_route_level4",
                         "b²(aθ''_a + θ'_a²) - a²(bθ''_b - θ'_b²) = b²θ'², a = θ[1,0], b = θ[1,1/2]",
                         "sinal do termo em θ'² trocado",
                         _rota_jato((1, 0), (1, "1/2"), lambda f: f.teta(1, "1/2") ** 2, nivel4=True)),
        VerificacaoSerie("jet_route_level5",
                         "b²(aθ''_a - θ'_a²) - a²(bθ''_b - θ'_b²) = ab·θ'², a = θ[1,1/5], b = θ[1,3/5]",
                         "sinal do termo em θ'² trocado",
                         _rota_jato((1, "1/5"), (1, "3/5"), lambda f: f.teta(1, "1/5") * f.teta(1, "3/5"))),
        VerificacaoSerie("jet_route_level6",
                         "b²(aθ''_a - θ'_a²) - a²(bθ''_b - θ'_b²) = θ[1,0]b·θ'², a = θ[1,1/3], b = θ[1,2/3]",
                         "sinal do termo em θ'² trocado",
                         _rota_jato((1, "1/3"), (1, "2/3"), lambda f: f.teta(1, 0) * f.teta(1, "2/3"))),
        VerificacaoSerie("jet_route_level8",
                         "b²(aθ''_a - θ'_a²) - a²(bθ''_b - θ'_b²) = θ[1,0]θ[1,1/2]·θ'², a = θ[1,1/4], b = θ[1,3/4]",
                         "sinal do termo em θ'² trocado",
                         _rota_jato((1, "1/4"), (1, "3/4"), lambda f: f.teta(1, 0) * f.teta(1, "1/2"))),
        VerificacaoSerie("derivative_half", "θ'[1,1/2] = -π θ²[0,0](0,2τ) θ[1,1/2]",
                         "π dobrado", _derivada_meio),
        VerificacaoSerie("derivative_thirds_1", "6θ'[1,1/3]θ[1,0]b³ = θ'(a⁴ - 3b⁴), a = θ[1,1/3], b = θ[1,2/3]",
                         "3 trocado por 1", _derivada_tercos(False)),
        VerificacaoSerie("derivative_thirds_2", "3θ'[1,2/3]θ[1,0]ab² = θ'a⁴, a = θ[1,1/3], b = θ[1,2/3]",
                         "3 trocado por 2", _derivada_tercos(True)),
        VerificacaoSerie("derivative_quarters_1",
                         "2aθ'[1,1/4] = -π(θ²[0,0](0,2τ)a² - θ²[0,1](0,2τ)b²), a = θ[1,1/4], b = θ[1,3/4]",
                         "sinal de θ²[0,1](0,2τ) trocado", _derivada_quartos(False)),
        VerificacaoSerie("derivative_quarters_2",
                         "2bθ'[1,3/4] = π(θ²[0,0](0,2τ)b² - θ²[0,1](0,2τ)a²), a = θ[1,1/4], b = θ[1,3/4]",
                         "sinal de θ²[0,1](0,2τ) trocado", _derivada_quartos(True)),
        VerificacaoSerie("derivative_fifths_1",
                         "10a³b³θ'[1,1/5] = θ'a(a⁵ - 3b⁵), a = θ[1,1/5], b = θ[1,3/5]",
                         "coeficientes 1 e 3 trocados", _derivada_quintos(False)),
        VerificacaoSerie("derivative_fifths_2",
                         "10a³b³θ'[1,3/5] = θ'b(3a⁵ + b⁵), a = θ[1,1/5], b = θ[1,3/5]",
                         "coeficientes 3 e 1 trocados", _derivada_quintos(True)),
        VerificacaoSerie("level4_second_derivative",
                         "θ''[1,0]/θ[1,0] - θ''[1,1/2]/θ[1,1/2] = -π²θ⁴[1,0](0,2τ)",
                         "π² dobrado", _segunda_derivada_nivel4),
        VerificacaoSerie("level4_divisor_sum",
                         "θ''[1,0]/θ[1,0] - θ''[1,1/2]/θ[1,1/2] = -16π² Σ σ(2n+1) q^{2n+1}",
                         "16 trocado por 8", _soma_divisores_nivel4),
        VerificacaoAritmetica("t4_theorem", "t₄(n) = σ(2n+1)", "σ(2n+1) trocado por σ(2n+3)",
                              lambda n, p: t4_count(n),
                              lambda n, p: sigma(1, 2 * n + (3 if p else 1)),
                              "LIMITE_T4"),
        VerificacaoSerie("t4_theta_series", "θ⁴[1,0](0,2τ) = 16q Σ t₄(n) q^{2n}",
                         "16 trocado por 8", _t4_teta, limite="LIMITE_T4", passo=2),
        VerificacaoSerie("eta_ode_level4",
                         "d/dq{(q²;q²)³/((q;q)²(q⁴;q⁴))} = 2(q⁴;q⁴)⁷/((q;q)²(q²;q²))",
                         "fator 2 omitido", _ode_eta_nivel4),
        VerificacaoSerie("theta_ratio_level4", "θ[1,0]/θ[1,1/2] = √2 (q²;q²)³/((q;q)²(q⁴;q⁴))",
                         "√2 omitido", _razao_nivel4),
        VerificacaoSerie("level4_eta_product",
                         "θ⁴[1,0](0,2τ)θ[1,0]/θ[1,1/2] = 16√2 q (q⁴;q⁴)⁷/((q;q)²(q²;q²))",
                         "16 trocado por 8", _produto_eta_nivel4),
        VerificacaoSerie("level5_second_derivative",
                         "θ''_a/a - θ''_b/b = θ'²(-8A² + 88AB + 8B²)/(100a⁶b⁶), A = a⁵, B = b⁵, "
                         "a = θ[1,1/5], b = θ[1,3/5]",
                         "88 trocado por 80", _segunda_derivada_nivel5),
        VerificacaoSerie("level5_eta_product", "θ'²/(θ[1,1/5]θ[1,3/5]) = (4π²/√5)(q;q)⁵/(q⁵;q⁵)",
                         "4π² trocado por 8π²", _produto_eta_nivel5),
        VerificacaoRiccati("riccati_level5", RICCATI_NIVEL5),
        VerificacaoConstanteRiccati("riccati_level5_constant", RICCATI_NIVEL5),
        VerificacaoSerie("level6_quartic", "θ³[1,0]θ[1,2/3] - θ⁴[1,1/3] + θ⁴[1,2/3] = 0",
                         "sinal de θ⁴[1,2/3] trocado", _quartica_nivel6),
        VerificacaoSerie("level6_second_derivative_1",
                         "θ''_a/a - θ''_b/b = -θ'²(a⁸ - 10a⁴b⁴ + 9b⁸)/(12θ²[1,0]a²b⁶), "
                         "a = θ[1,1/3], b = θ[1,2/3]",
                         "10 trocado por 9", _segunda_derivada_nivel6(1)),
        VerificacaoSerie("level6_second_derivative_2",
                         "θ''_a/a - θ''_b/b = -θ'²θ[1,0](a⁴ - 9b⁴)/(12a²b⁵), a = θ[1,1/3], b = θ[1,2/3]",
                         "9 trocado por 8", _segunda_derivada_nivel6(2)),
        VerificacaoSerie("level6_factorization", "a⁸ - 10a⁴b⁴ + 9b⁸ = θ³[1,0]b(a⁴ - 9b⁴), a = θ[1,1/3], b = θ[1,2/3]",
                         "9 trocado por 8", _fatoracao_nivel6),
        VerificacaoSerie("level6_eta_product",
                         "θ'²θ²[1,1/3]/(θ²[1,0]θ²[1,2/3]) = 3π²((q;q)²(q³;q³)²/((q²;q²)(q⁶;q⁶)))²",
                         "3π² trocado por 6π²", _produto_eta_nivel6),
        VerificacaoRiccati("riccati_level6", RICCATI_NIVEL6),
        VerificacaoConstanteRiccati("riccati_level6_constant", RICCATI_NIVEL6),
        VerificacaoSerie("riccati_level6_eta_form",
                         "θ⁴[1,1/3]/θ⁴[1,2/3] = {√3 (q²;q²)(q³;q³)²/((q;q)²(q⁶;q⁶))}⁴",
                         "9 trocado por 3", _riccati_forma_eta_nivel6),
        VerificacaoRiccati("eta_ode_level6", ODE_ETA_NIVEL6),
        VerificacaoSerie("level8_identity_1", "θ[1,0]θ³[1,1/2] = θ[1,1/4]θ³[1,3/4] + θ[1,3/4]θ³[1,1/4]",
                         "sinal de θ[1,3/4]θ³[1,1/4] trocado", _identidade_nivel8(1)),
        VerificacaoSerie("level8_identity_2",
                         "θ²[1,0]θ[1,1/4]θ[1,3/4] = θ²[1,1/2](θ²[1,1/4] - θ²[1,3/4])",
                         "sinal de θ²[1,1/2]θ²[1,3/4] trocado", _identidade_nivel8(2)),
        VerificacaoSerie("level8_identity_3", "θ⁴[1,1/4] - θ⁴[1,3/4] = θ[1,1/2]θ³[1,0]",
                         "sinal de θ[1,1/2]θ³[1,0] trocado", _identidade_nivel8(3)),
        VerificacaoSerie("level8_second_derivative",
                         "θ''_a/a - θ''_b/b = -(1/8)θ'²θ[1,0]θ[1,1/2](A² - 6AB + B²)/(A²B²), "
                         "A = a², B = b², a = θ[1,1/4], b = θ[1,3/4]",
                         "6 trocado por 5", _segunda_derivada_nivel8),
        VerificacaoSerie("level8_relation_intermediate",
                         "θ''_a/a - θ''_b/b = -(1/8)θ'²θ³[1,0]θ⁷[1,1/2]/(a⁶b⁶) + θ'²θ[1,0]θ[1,1/2]/(a²b²)",
                         "8 trocado por 4", _relacao_intermediaria_nivel8),
        VerificacaoSerie("level8_eta_product",
                         "θ'²θ[1,0]θ[1,1/2]/(a²b²) = 4√2π² η²(τ)η(2τ)η³(4τ)/η²(8τ)",
                         "4√2π² trocado por 8√2π²", _produto_eta_nivel8),
        VerificacaoSerie("level8_eta13_product",
                         "(1/8)θ'²θ³[1,0]θ⁷[1,1/2]/(a⁶b⁶) = 4√2π² η¹³(4τ)/(η²(τ)η(2τ)η⁶(8τ))",
                         "32√2π² trocado por 16√2π²", _produto_eta13_nivel8),
        VerificacaoSerie("level8_eta_expansion",
                         "η²(τ)η(2τ)η³(4τ)/η²(8τ) = 1 - 2 Σ (Σ_{d|n} d(8/d)) qⁿ",
                         "fator 2 omitido",
                         _expansao({1: 2, 2: 1, 4: 3, 8: -2}, coeficiente_eta_nivel8),
                         limite="LIMITE_COROLARIO"),
        VerificacaoSerie("level8_eta13_expansion",
                         "η¹³(4τ)/(η²(τ)η(2τ)η⁶(8τ)) = 1 - 2 Σ (Σ_{d|n} (d(8/d) - 2(n/d)(8/d))) qⁿ",
                         "fator 2 omitido",
                         _expansao({1: -2, 2: -1, 4: 13, 8: -6}, coeficiente_eta13_nivel8),
                         limite="LIMITE_COROLARIO"),
        VerificacaoSerie("level8_expansion_difference",
                         "η¹³(4τ)/(η²(τ)η(2τ)η⁶(8τ)) - η²(τ)η(2τ)η³(4τ)/η²(8τ) = 4 Σ (Σ_{d|n} (n/d)(8/d)) qⁿ",
                         "4 trocado por 2", _diferenca_expansoes, limite="LIMITE_COROLARIO"),
        VerificacaoRiccati("riccati_level8", RICCATI_NIVEL8),
        VerificacaoConstanteRiccati("riccati_level8_constant", RICCATI_NIVEL8),
        VerificacaoSerie("ramanujan_e2", "q dE₂/dq = (E₂² - E₄)/12", "12 trocado por 6", _ramanujan("E2")),
        VerificacaoSerie("ramanujan_e4", "q dE₄/dq = (E₂E₄ - E₆)/3", "3 trocado por 2", _ramanujan("E4")),
        VerificacaoSerie("ramanujan_e6", "q dE₆/dq = (E₂E₆ - E₄²)/2", "2 trocado por 1", _ramanujan("E6")),
        VerificacaoSerie("eisenstein_riccati", "(6/(πi)) u' + u² = E₄ com u = -E₂",
                         "6 trocado por 3", _riccati_eisenstein),
    ]
    for nome, pares in PARES_PRODUTO.items():
        (e, el), (d, dl) = pares
        registro.append(VerificacaoSerie(
            nome,
            f"θ[{e},{el}]θ[{d},{dl}](τ) = Σ produtos em 2τ com características ((ε±δ)/2, ε'±δ') e deslocadas",
            "ε' + 1 no primeiro fator", _lema_produto(pares)))
    registro.sort(key=lambda v: v.id)
    ids = [v.id for v in registro]
    if len(set(ids)) != len(ids):
        raise ValueError("Identificadores repetidos no registro")
    return registro
