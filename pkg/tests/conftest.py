import pytest

from config import Config
from eta.aritmetica import limpar_memorias
from exato.ciclotomico import CorpoCiclotomico


@pytest.fixture(autouse=True)
def config_padrao():
    """Cada teste começa com a Config padrão."""
    config = Config()
    config.restaurar_padroes()
    yield config
    config.restaurar_padroes()
    limpar_memorias()


@pytest.fixture
def corpo():
    return CorpoCiclotomico.de_ordem(240)
