"""
Shared pytest fixtures for all tests.

Fixtures for unit, integration and e2e tests live here: corpus data and
repositories, services, the CLI runner and the HTTP client.
"""

import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple
from unittest.mock import Mock

import pytest
from httpx import ASGITransport, AsyncClient

from src.cli.main import main
from src.config.settings import settings
from src.domain.models.corpus import CorpusFormula, Theory, TheoryAxiom
from src.domain.ports.formula_corpus_repository import FormulaCorpusRepositoryPort
from src.domain.services.formula_service import FormulaService
from src.domain.services.verification_service import VerificationService
from src.infrastructure.repositories.json_formula_corpus_repository import (
    JsonFormulaCorpusRepository,
)
from src.main import create_application


# ==============================================================================
# TEST DATA FIXTURES
# ==============================================================================


@pytest.fixture
def set_corpus_entries() -> List[CorpusFormula]:
    """
    Small set-theoretic corpus: bounded, E_1 and U_1 shapes.

    Returns:
        List of CorpusFormula instances
    """
    return [
        CorpusFormula(name="member", signature="set", text="x in y", tags=["delta0"]),
        CorpusFormula(name="subset", signature="set", text="x subset y", tags=["delta0"]),
        CorpusFormula(name="superset_exists", signature="set", text="exists z. x in z", tags=["E1"]),
        CorpusFormula(
            name="universal_subset", signature="set", text="forall z. z in x -> z in y", tags=["U1"]
        ),
    ]


@pytest.fixture
def arith_corpus_entries() -> List[CorpusFormula]:
    """
    Small arithmetic corpus.

    Returns:
        List of CorpusFormula instances
    """
    return [
        CorpusFormula(name="successor_graph", signature="arith", text="S(x) = y", tags=["delta0"]),
        CorpusFormula(name="even", signature="arith", text="exists y. y + y = x", tags=["E1"]),
        CorpusFormula(
            name="bounded_predecessor", signature="arith", text="exists y < x. S(y) = x", tags=["delta0"]
        ),
    ]


@pytest.fixture
def test_theories() -> Dict[str, Theory]:
    """
    The two theories with a handful of axioms each.

    Returns:
        Theories by name
    """
    return {
        "HA": Theory(
            name="HA",
            signature="arith",
            axioms=[
                TheoryAxiom(name="successor_nonzero", text="forall x. S(x) != 0"),
                TheoryAxiom(name="add_zero", text="forall x. x + 0 = x"),
            ],
        ),
        "T": Theory(
            name="T",
            signature="set",
            axioms=[
                TheoryAxiom(name="pairing", check="pairing"),
                TheoryAxiom(name="set_induction", check="set_induction"),
            ],
        ),
    }


@pytest.fixture
def test_corpus_file_path() -> Path:
    """
    Path to the test corpus JSON file.

    Returns:
        Path to fixtures/test_corpus.json
    """
    return Path(__file__).parent / "fixtures" / "test_corpus.json"


@pytest.fixture
def test_corpus_data(test_corpus_file_path: Path) -> Dict[str, Any]:
    """
    Raw content of the test corpus.

    Returns:
        The parsed JSON document
    """
    with open(test_corpus_file_path, "r", encoding="utf-8") as f:
        return json.load(f)


@pytest.fixture
def bundled_corpus_file_path() -> Path:
    """
    Path to the corpus shipped in data/.

    Returns:
        Path to data/formula_corpus.json
    """
    return Path(__file__).parent.parent / "data" / "formula_corpus.json"


# ==============================================================================
# MOCK FIXTURES
# ==============================================================================


@pytest.fixture
def mock_corpus_repository() -> Mock:
    """
    Mock FormulaCorpusRepositoryPort for unit testing.

    Returns:
        Mock repository with spec
    """
    return Mock(spec=FormulaCorpusRepositoryPort)


@pytest.fixture
def mock_corpus_repository_with_data(
    mock_corpus_repository: Mock,
    set_corpus_entries: List[CorpusFormula],
    arith_corpus_entries: List[CorpusFormula],
    test_theories: Dict[str, Theory],
) -> Mock:
    """
    Mock repository pre-configured with the small corpora.

    Returns:
        Configured mock repository
    """
    entries = set_corpus_entries + arith_corpus_entries

    def mock_find_by_name(name: str):
        return next((e for e in entries if e.name == name), None)

    def mock_find_by_signature(signature: str):
        return [e for e in entries if e.signature == signature]

    def mock_find_by_tag(tag: str):
        return [e for e in entries if tag in e.tags]

    mock_corpus_repository.find_all.side_effect = lambda: list(entries)
    mock_corpus_repository.find_by_name.side_effect = mock_find_by_name
    mock_corpus_repository.find_by_signature.side_effect = mock_find_by_signature
    mock_corpus_repository.find_by_tag.side_effect = mock_find_by_tag
    mock_corpus_repository.theory.side_effect = test_theories.get
    mock_corpus_repository.count.side_effect = lambda: len(entries)

    return mock_corpus_repository


# ==============================================================================
# SERVICE FIXTURES
# ==============================================================================


@pytest.fixture
def verification_service(mock_corpus_repository_with_data: Mock) -> VerificationService:
    """
    VerificationService over the mocked corpus.

    Returns:
        VerificationService instance
    """
    return VerificationService(corpus_repository=mock_corpus_repository_with_data)


@pytest.fixture
def formula_service() -> FormulaService:
    return FormulaService()


# ==============================================================================
# REPOSITORY FIXTURES
# ==============================================================================


@pytest.fixture
def json_repository(test_corpus_file_path: Path) -> JsonFormulaCorpusRepository:
    """
    Real JsonFormulaCorpusRepository over the test corpus.

    Returns:
        JsonFormulaCorpusRepository instance
    """
    return JsonFormulaCorpusRepository(data_file_path=test_corpus_file_path)


@pytest.fixture
def bundled_repository(bundled_corpus_file_path: Path) -> JsonFormulaCorpusRepository:
    return JsonFormulaCorpusRepository(data_file_path=bundled_corpus_file_path)


# ==============================================================================
# SETTINGS FIXTURES
# ==============================================================================


@pytest.fixture
def small_bit_cap(monkeypatch: pytest.MonkeyPatch) -> int:
    """
    Lower the bit cap to 64 bits for the duration of a test.

    Returns:
        The cap in force
    """
    monkeypatch.setattr(settings, "bit_cap", 64)
    return 64


# ==============================================================================
# CLI FIXTURES
# ==============================================================================


@pytest.fixture
def run_cli(capsys: pytest.CaptureFixture) -> Callable[..., Tuple[int, str, str]]:
    """
    Run the command line in-process.

    Returns:
        Function taking the arguments and returning (exit code, stdout, stderr)
    """

    def run(*argv: str) -> Tuple[int, str, str]:
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


# ==============================================================================
# API CLIENT FIXTURES
# ==============================================================================


@pytest.fixture
async def test_client() -> AsyncClient:
    """
    Async HTTP client for testing FastAPI endpoints.

    Yields:
        AsyncClient instance with the application
    """
    app = create_application()
    transport = ASGITransport(app=app)
    async with AsyncClient(transport=transport, base_url="http://test") as client:
        yield client


@pytest.fixture
async def test_client_with_test_data(test_corpus_file_path: Path) -> AsyncClient:
    """
    Async HTTP client whose corpus comes from the test fixture file.

    Yields:
        AsyncClient instance
    """
    app = create_application()

    from src.api.dependencies import get_verification_service

    def override_get_verification_service():
        repository = JsonFormulaCorpusRepository(data_file_path=test_corpus_file_path)
        return VerificationService(corpus_repository=repository)

    app.dependency_overrides[get_verification_service] = override_get_verification_service

    transport = ASGITransport(app=app)
    async with AsyncClient(transport=transport, base_url="http://test") as client:
        yield client


# ==============================================================================
# PARAMETRIZE FIXTURES
# ==============================================================================


@pytest.fixture(params=[
    "",  # Empty
    "{",  # Unclosed
    "{{}",  # Unbalanced
    "{}}",  # Trailing brace
    "{,}",  # Missing element
    "#",  # Code without digits
    "{} {}",  # Two literals
])
def invalid_set_literal(request) -> str:
    """
    Parametrized fixture for malformed brace literals.

    Returns:
        Invalid literal text
    """
    return request.param


@pytest.fixture(params=[
    "x =",  # Missing right term
    "forall . x = x",  # Missing variable
    "x = y /\\",  # Dangling connective
    "(x = y",  # Unclosed parenthesis
    "x = 1",  # Numeral other than 0
    "x ? y",  # Unknown character
])
def invalid_formula_text(request) -> str:
    """
    Parametrized fixture for formula texts that do not parse.

    Returns:
        Invalid formula text
    """
    return request.param
