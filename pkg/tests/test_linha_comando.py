import json

import pytest

from exato.erros import ErroNomeSerie
from interface.linha_comando import main, tabela_coeficientes
from interface.nomes import interpretar_nome


# ==============================================================
# TESTES - verify
# ==============================================================

def test_verify_por_id(capsys):
    assert main(["verify", "--id", "riccati_level5", "--order", "4"]) == 0
    saida = capsys.readouterr().out.splitlines()
    assert len(saida) == 1
    assert saida[0].startswith("PASS  riccati_level5  q4  ")


def test_verify_json(capsys):
    assert main(["verify", "--id", "jacobi_*", "--order", "5/2", "--format", "json"]) == 0
    dados = json.loads(capsys.readouterr().out)
    assert [d["id"] for d in dados] == ["jacobi_derivative", "jacobi_quartic"]
    assert all(d["pass"] and d["qOrder"] == "5/2" for d in dados)


def test_verify_id_desconhecido(capsys):
    assert main(["verify", "--id", "nonexistent"]) == 2
    assert "nonexistent" in capsys.readouterr().err


def test_verify_ordem_invalida(capsys):
    assert main(["verify", "--order", "0"]) == 2
    assert main(["verify", "--zorder", "1", "--id", "parity"]) == 2
    assert main(["verify", "--field-order", "100", "--id", "parity"]) == 2


def test_verify_controles_negativos(capsys):
    assert main(["verify", "--id", "ramanujan_*", "--order", "3", "--negative-controls"]) == 0
    saida = capsys.readouterr().out
    assert saida.count("FAIL") == 3
    assert "ramanujan_e2:perturbed" in saida


def test_verify_saida_em_arquivo(tmp_path, capsys):
    destino = tmp_path / "relatorio.json"
    assert main(["verify", "--id", "level8_identity_1", "--order", "3", "--format", "json",
                 "--out", str(destino)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(destino.read_text(encoding="utf-8"))[0]["id"] == "level8_identity_1"


def test_argumentos_mutuamente_exclusivos():
    with pytest.raises(SystemExit) as saida:
        main(["verify", "--all", "--id", "parity"])
    assert saida.value.code == 2


# ==============================================================
# TESTES - expand
# ==============================================================

def test_expand_e4(capsys):
    assert main(["expand", "E4", "--order", "5"]) == 0
    assert capsys.readouterr().out == "E4 = ( 1 + 240 * q + 2160 * q^2 + 6720 * q^3 + 17520 * q^4 + O(q^5) )\n"


def test_expand_w6_json(capsys):
    assert main(["expand", "W6", "--order", "3", "--format", "json"]) == 0
    dados = json.loads(capsys.readouterr().out)
    assert dados["name"] == "W6"
    assert dados["terms"][0] == {"exponent": "0", "coefficient": "9"}
    assert dados["truncation"] == "3"


def test_expand_teta_quintos(capsys):
    assert main(["expand", "theta:1,1/5", "--order", "3", "--format", "json"]) == 0
    termo = json.loads(capsys.readouterr().out)["terms"][0]
    assert termo["exponent"] == "1/8"
    assert "ζ" in termo["coefficient"]


def test_expand_eta(capsys):
    assert main(["expand", "eta:1", "--order", "2"]) == 0
    assert capsys.readouterr().out.startswith("eta:1 = ( q^(1/24) - q^(25/24)")


def test_expand_nome_desconhecido(capsys):
    assert main(["expand", "theta:1,1/7"]) == 2
    assert main(["expand", "E8"]) == 2


def test_gramatica_dos_nomes():
    assert interpretar_nome("E2").tipo == "eisenstein"
    assert interpretar_nome("W8").tipo == "riccati"
    assert interpretar_nome("eta:1^2,2,4^3,8^-2").quociente.fatores == ((1, 2), (2, 1), (4, 3), (8, -2))
    assert interpretar_nome("theta:0,1@2").escala == 2
    for nome in ("theta:1", "eta:1^a", "W7", "theta:1,1@0"):
        with pytest.raises(ErroNomeSerie):
            interpretar_nome(nome)


# ==============================================================
# TESTES - coeffs
# ==============================================================

def test_coeffs_t4(capsys):
    assert main(["coeffs", "t4", "3"]) == 0
    assert capsys.readouterr().out == "n,t4,sigma(2n+1)\n0,1,1\n1,4,4\n2,6,6\n3,8,8\n"


def test_coeffs_sigma_e_kron8():
    assert tabela_coeficientes("sigma1", 6).splitlines()[-1] == "6,12"
    assert tabela_coeficientes("kron8_twist", 3).splitlines() == ["n,sum_d_kron8", "1,1", "2,1", "3,-2"]


def test_coeffs_n_negativo(capsys):
    assert main(["coeffs", "t4", "-1"]) == 2


def test_coeffs_saida_em_arquivo(tmp_path, capsys):
    destino = tmp_path / "s.csv"
    assert main(["coeffs", "sigma1", "3", "--out", str(destino)]) == 0
    assert capsys.readouterr().out == ""
    assert destino.read_text(encoding="utf-8") == "n,sigma1\n1,1\n2,3\n3,4\n"
