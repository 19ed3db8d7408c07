import logging

import pytest
from click.testing import CliRunner

from chromastat import create_config
from chromastat.graph import FamilyEnum, FamilySpec, generate_family, parse_dimacs

logger = logging.getLogger(__name__)


@pytest.fixture
def config():
    return create_config({
        'TESTING': True,
        'MAX_N': 16,
        'ORACLE_MAX_N': 8,
    })


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def c5():
    return generate_family(FamilySpec(FamilyEnum.CYCLE, n=5))


@pytest.fixture
def k4():
    return generate_family(FamilySpec(FamilyEnum.COMPLETE, n=4))


@pytest.fixture
def p5():
    return generate_family(FamilySpec(FamilyEnum.PATH, n=5))


@pytest.fixture
def w6():
    """hub 0 on the rim cycle 1..5"""
    return generate_family(FamilySpec(FamilyEnum.WHEEL, n=6))


@pytest.fixture
def star4():
    """K(1,3), hub on vertex 0"""
    return generate_family(FamilySpec(FamilyEnum.STAR, n=4))


@pytest.fixture
def p3_dimacs():
    return "c path on three vertices\np edge 3 2\ne 1 2\ne 2 3\n"


@pytest.fixture
def p3(p3_dimacs):
    return parse_dimacs(p3_dimacs)


@pytest.fixture
def p3_file(tmp_path, p3_dimacs):
    path = tmp_path / "p3.col"
    path.write_text(p3_dimacs)
    return path
