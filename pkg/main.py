#!/usr/bin/env python3
"""
Verificador de Identidades Teta - Ponto de Entrada.

Motor exato de q-séries: funções teta com características racionais,
quocientes eta e séries de Eisenstein com coeficientes em Q(ζ_240) e
grau em π, usado para certificar identidades até uma ordem em q.

Funcionalidades Principais:
    - Corpo ciclotômico Q(ζ_M) com aritmética exata
    - Séries de Puiseux graduadas por π e jatos em z
    - Funções teta pela soma e pelo produto triplo de Jacobi
    - Quocientes eta, Eisenstein E₂/E₄/E₆ e funções aritméticas
    - Registro de identidades com controles negativos
    - Equações de Riccati de níveis 5, 6 e 8

Uso:
    $ python3 main.py verify --all --order 30
    $ python3 main.py verify --id 'level8_*' --format json --out relatorio.json
    $ python3 main.py verify --negative-controls --order 10
    $ python3 main.py expand theta:1,1/5 --order 3
    $ python3 main.py coeffs t4 20

Variáveis de Ambiente:
    THETA_RICCATI_THREADS: Limite de threads das verificações.
"""
import sys

from interface import main

if __name__ == "__main__":
    sys.exit(main())
