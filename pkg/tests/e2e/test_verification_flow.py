"""
End-to-end tests for complete verification workflows.

These tests drive the HTTP API, the command line and the self-test suite
over the bundled corpus without mocks.
"""

import json

import pytest
from httpx import AsyncClient
from fastapi import status

from src.cli.main import EXIT_OK
from src.config.settings import settings
from src.domain.services.verification_service import VerificationService
from src.infrastructure.repositories.json_formula_corpus_repository import (
    JsonFormulaCorpusRepository,
)


@pytest.mark.e2e
@pytest.mark.asyncio
class TestTranslationWorkflowE2E:
    """End-to-end tests for the browse, classify and translate workflow."""

    async def test_complete_translation_workflow(self, test_client: AsyncClient) -> None:
        """
        Complete workflow: browse corpus → classify → translate → evaluate

        GIVEN: The bundled corpus
        WHEN: A set formula is picked, classified, translated along a and
              the translation evaluated
        THEN: The translated level should stay within max(1, source E-level)
              and the translation evaluate like the source
        """
        # Step 1: Browse the bounded set formulas
        corpus = await test_client.get("/api/v1/corpus", params={"signature": "set"})
        assert corpus.status_code == status.HTTP_200_OK
        assert corpus.json()["summary"]["formulas"] == 61
        assert len(corpus.json()["formulas"]) == 30

        # Step 2: Classify x ∈ y
        classify = await test_client.post(
            "/api/v1/formulas/classify", json={"formula": "x in y", "signature": "set"}
        )
        assert classify.json() == {"e_level": 0, "u_level": 0}

        # Step 3: Translate along a
        translate = await test_client.post(
            "/api/v1/formulas/translate",
            json={"formula": "x in y", "interpretation": "a"},
        )
        assert translate.status_code == status.HTTP_200_OK
        translation = translate.json()
        assert translation["target_level"]["e_level"] <= 1

        # Step 4: Evaluate the translation where the source holds (0 ∈ 1)
        evaluate = await test_client.post(
            "/api/v1/formulas/eval",
            json={
                "formula": translation["formula"],
                "signature": translation["target_signature"],
                "env": {"x": 0, "y": 1},
                "closed": True,
            },
        )
        assert evaluate.status_code == status.HTTP_200_OK
        assert evaluate.json()["value"] == "True"

    async def test_stage_workflow(self, test_client: AsyncClient) -> None:
        """
        GIVEN: D_2
        WHEN: Pairing fails without bump and is rechecked with one
        THEN: The counterexample should be the pair code, then pass
        """
        # Step 1: Stage bound
        stage = await test_client.get("/api/v1/stages/2")
        assert stage.json()["bound"] == 2

        # Step 2: Witness outside the stage
        failed = await test_client.get("/api/v1/stages/2/axioms/pairing")
        z = failed.json()["counterexample"]["z"]

        # Step 3: The witness is the code of {0, 1}
        decoded = await test_client.get(f"/api/v1/codes/{z}")
        assert decoded.json()["set"] == "{{},{{}}}"

        # Step 4: One stage up it fits
        passed = await test_client.get("/api/v1/stages/2/axioms/pairing", params={"bump": 1})
        assert passed.json()["result"] == "pass"


@pytest.mark.e2e
class TestCommandLineWorkflowE2E:
    """End-to-end tests through the command line."""

    def test_encode_then_apply_then_decode(self, run_cli) -> None:
        # Step 1: Encode two sets
        _, first, _ = run_cli("encode", "{}")
        _, second, _ = run_cli("encode", "{{}}")

        # Step 2: Build their ordered pair
        code, paired, _ = run_cli("op", "op", first.strip(), second.strip(), "--json")
        assert code == EXIT_OK
        pair_code = json.loads(paired)["result"]

        # Step 3: Unpair it again
        _, unpaired, _ = run_cli("op", "unpair", str(pair_code), "--json")
        assert json.loads(unpaired)["result"] == [0, 1]

    def test_translate_then_classify(self, run_cli) -> None:
        # Step 1: Translate an unbounded set formula along a
        code, out, _ = run_cli("translate", "exists z. x in z", "--interp", "a", "--json")
        assert code == EXIT_OK
        translation = json.loads(out)

        # Step 2: Classify the translation over its target signature
        code, level, _ = run_cli(
            "classify", translation["formula"], "--sig", translation["target_signature"]
        )
        assert code == EXIT_OK
        expected = translation["target_level"]
        assert level.strip() == f"E={expected['e_level']} U={expected['u_level']}"


@pytest.mark.e2e
@pytest.mark.slow
class TestSelftestE2E:
    """The quick self-test over the bundled corpus."""

    def test_quick_selftest_passes(self) -> None:
        """
        GIVEN: The bundled corpus
        WHEN: The quick self-test runs
        THEN: Every primary criterion should pass
        """
        # Arrange
        repository = JsonFormulaCorpusRepository(settings.corpus_file_absolute_path)
        service = VerificationService(repository)

        # Act
        report = service.selftest(quick=True)

        # Assert
        failing = [c.title for c in report.criteria if c.primary and c.result != "pass"]
        assert report.passed, failing
        assert len(report.criteria) == 16
        assert sum(c.primary for c in report.criteria) == 12
