"""
Relatório de uma verificação.

A forma JSON tem chaves em ordem fixa e expoentes como frações exatas
'p/r', de modo que ler e reserializar a saída reproduz os mesmos bytes.
"""
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from utils.conversor import Conversor


@dataclass(frozen=True)
class Testemunha:
    """Primeiro termo não nulo de um resíduo."""
    expoente: Fraction
    coeficiente: str
    grau_z: Optional[int] = None

    def para_dict(self) -> dict:
        return {
            "exponent": Conversor.fracao_para_texto(self.expoente),
            "coefficient": self.coeficiente,
            "zDegree": self.grau_z,
        }


@dataclass(frozen=True)
class RelatorioVerificacao:
    """
    Resultado de uma verificação.

    Attributes:
        id (str): Identificador no registro.
        enunciado (str): Fórmula verificada.
        ordem_q (Fraction): Ordem em q efetivamente verificada.
        ordem_z (int | None): Ordem em z (verificações de jatos).
        passou (bool): True se o resíduo é nulo até ordem_q.
        testemunha (Testemunha | None): Primeiro termo não nulo.
        milissegundos (int): Tempo de parede.
        diagnostico (str | None): Mensagem de erro de construção.
    """
    id: str
    enunciado: str
    ordem_q: Fraction
    ordem_z: Optional[int]
    passou: bool
    testemunha: Optional[Testemunha]
    milissegundos: int
    diagnostico: Optional[str] = None

    def para_dict(self) -> dict:
        return {
            "id": self.id,
            "statement": self.enunciado,
            "qOrder": Conversor.fracao_para_texto(self.ordem_q),
            "zOrder": self.ordem_z,
            "pass": self.passou,
            "witness": self.testemunha.para_dict() if self.testemunha else None,
            "millis": self.milissegundos,
            "diagnostic": self.diagnostico,
        }

    def para_texto(self) -> str:
        """Linha 'PASS|FAIL  id  q<ordem>  <ms> ms' e, em falha, o motivo."""
        estado = "PASS" if self.passou else "FAIL"
        linha = f"{estado}  {self.id}  q{Conversor.fracao_para_texto(self.ordem_q)}  {self.milissegundos} ms"
        if self.testemunha is not None:
            t = self.testemunha
            local = f" (z^{t.grau_z})" if t.grau_z is not None else ""
            linha += f"\n    testemunha{local}: {t.coeficiente} * q^({Conversor.fracao_para_texto(t.expoente)})"
        if self.diagnostico:
            linha += f"\n    diagnóstico: {self.diagnostico}"
        return linha


def relatorios_para_json(relatorios: list) -> str:
    return json.dumps([r.para_dict() for r in relatorios], indent=2, ensure_ascii=False)
