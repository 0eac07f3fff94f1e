"""
Gramática dos nomes aceitos por `expand`.

    theta:E,E'[@K]   constante θ[E, E'](0, K·τ) (K padrão 1)
    eta:K^R,K^R,...  quociente eta Π η(Kτ)^R (R padrão 1)
    E2 | E4 | E6     séries de Eisenstein
    W5 | W6 | W8     funções das equações de Riccati

Exemplos:
    >>> objeto = interpretar_nome("theta:1,1/5@2")
    >>> objeto.tipo, str(objeto.caracteristica), objeto.escala
    ('theta', '[1,1/5]', 2)
"""
import re
from dataclasses import dataclass
from typing import Optional

from eta.eisenstein import EISENSTEIN
from eta.produtos import QuocienteEta
from exato.erros import ErroNomeSerie
from identidades.riccati import FUNCOES_W
from series.serie_pi import SeriePi
from teta.caracteristica import Caracteristica

_TETA = re.compile(r"theta:([^@]+)(?:@(\d+))?")


@dataclass(frozen=True)
class ObjetoNomeado:
    """Nome de `expand` já interpretado."""
    tipo: str
    texto: str
    caracteristica: Optional[Caracteristica] = None
    escala: int = 1
    quociente: Optional[QuocienteEta] = None


def interpretar_nome(texto: str) -> ObjetoNomeado:
    """
    Interpreta um nome de série.

    Raises:
        ErroNomeSerie: Nome fora da gramática, característica sem fases
            no corpo configurado ou quociente eta malformado.
    """
    nome = texto.strip()
    if nome in EISENSTEIN:
        return ObjetoNomeado("eisenstein", nome)
    if nome in FUNCOES_W:
        return ObjetoNomeado("riccati", nome)
    if nome.startswith("theta:"):
        m = _TETA.fullmatch(nome)
        if not m:
            raise ErroNomeSerie(f"Nome de teta inválido: '{texto}' (esperado theta:E,E'[@K])")
        try:
            car = Caracteristica.de_texto(m.group(1))
        except (ValueError, ZeroDivisionError) as erro:
            raise ErroNomeSerie(f"Característica não suportada em '{texto}': {erro}") from erro
        escala = int(m.group(2) or 1)
        if escala < 1:
            raise ErroNomeSerie(f"Escala em τ deve ser positiva em '{texto}'")
        return ObjetoNomeado("theta", nome, caracteristica=car, escala=escala)
    if nome.startswith("eta:"):
        try:
            quociente = QuocienteEta.de_texto(nome[len("eta:"):])
        except ValueError as erro:
            raise ErroNomeSerie(f"Quociente eta inválido em '{texto}': {erro}") from erro
        return ObjetoNomeado("eta", nome, quociente=quociente)
    raise ErroNomeSerie(
        f"Nome desconhecido: '{texto}' (use theta:E,E'[@K], eta:K^R,..., E2|E4|E6 ou W5|W6|W8)")


def construir_serie(objeto: ObjetoNomeado, fabrica) -> SeriePi:
    """Série do objeto nomeado, truncada na ordem em q da fábrica."""
    if objeto.tipo == "eisenstein":
        serie = fabrica.eisenstein(objeto.texto)
    elif objeto.tipo == "riccati":
        serie = FUNCOES_W[objeto.texto](fabrica)
    elif objeto.tipo == "theta":
        car = objeto.caracteristica
        serie = fabrica.teta(car.eps, car.eps_linha, objeto.escala)
    else:
        serie = fabrica.eta(dict(objeto.quociente.fatores))
    return serie.truncar(min(fabrica.ordem_q, serie.trunc))
