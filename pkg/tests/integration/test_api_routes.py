"""
Integration tests for API routes.

These tests verify the complete HTTP request/response cycle, including
request validation, service orchestration, and response serialization.
"""

import pytest
from httpx import AsyncClient
from fastapi import status

PREFIX = "/api/v1"


@pytest.mark.integration
@pytest.mark.asyncio
class TestCodeEndpoints:
    """Test suite for the /codes endpoints."""

    async def test_should_decode_code_with_200(self, test_client: AsyncClient) -> None:
        """
        GIVEN: The code 3
        WHEN: GET /api/v1/codes/3 is called
        THEN: The set {∅, {∅}} should come back with its size and rank
        """
        # Act
        response = await test_client.get(f"{PREFIX}/codes/3")

        # Assert
        assert response.status_code == status.HTTP_200_OK
        assert response.json() == {"code": 3, "set": "{{},{{}}}", "size": 2, "rank": 2}

    async def test_should_reject_negative_code(self, test_client: AsyncClient) -> None:
        response = await test_client.get(f"{PREFIX}/codes/-1")
        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY

    async def test_should_encode_literal(self, test_client: AsyncClient) -> None:
        # Act
        response = await test_client.post(f"{PREFIX}/codes/encode", json={"literal": "{{}}"})

        # Assert
        assert response.status_code == status.HTTP_200_OK
        assert response.json()["code"] == 1

    async def test_should_return_400_for_malformed_literal(self, test_client: AsyncClient) -> None:
        # Act
        response = await test_client.post(f"{PREFIX}/codes/encode", json={"literal": "{} {}"})

        # Assert
        assert response.status_code == status.HTTP_400_BAD_REQUEST
        error = response.json()["error"]
        assert error["type"] == "SetLiteralSyntaxException"
        assert error["details"]["position"] == 3

    @pytest.mark.parametrize("path,expected", [
        ("/codes/1/ops/op?b=1", 4),
        ("/codes/3/ops/unpair", None),
        ("/codes/0/ops/eps?b=1", True),
        ("/codes/3/ops/union", 1),
    ])
    async def test_should_apply_operation(
        self, test_client: AsyncClient, path: str, expected
    ) -> None:
        # Act
        response = await test_client.get(f"{PREFIX}{path}")

        # Assert
        assert response.status_code == status.HTTP_200_OK
        assert response.json()["result"] == expected

    @pytest.mark.parametrize("path", [
        "/codes/1/ops/powerset",
        "/codes/1/ops/pair",
        "/codes/1/ops/union?b=2",
    ])
    async def test_should_return_400_for_bad_operation(
        self, test_client: AsyncClient, path: str
    ) -> None:
        response = await test_client.get(f"{PREFIX}{path}")
        assert response.status_code == status.HTTP_400_BAD_REQUEST


@pytest.mark.integration
@pytest.mark.asyncio
class TestFormulaEndpoints:
    """Test suite for the /formulas endpoints."""

    async def test_should_classify_formula(self, test_client: AsyncClient) -> None:
        # Act
        response = await test_client.post(
            f"{PREFIX}/formulas/classify", json={"formula": "exists z. x in z"}
        )

        # Assert
        assert response.status_code == status.HTTP_200_OK
        assert response.json() == {"e_level": 1, "u_level": 2}

    async def test_should_return_error_envelope_for_syntax_error(
        self, test_client: AsyncClient
    ) -> None:
        """
        GIVEN: A formula missing its right-hand term
        WHEN: POST /api/v1/formulas/classify is called
        THEN: 400 with the type, message and position should be returned
        """
        # Act
        response = await test_client.post(
            f"{PREFIX}/formulas/classify", json={"formula": "x =", "signature": "arith"}
        )

        # Assert
        assert response.status_code == status.HTTP_400_BAD_REQUEST
        error = response.json()["error"]
        assert error["type"] == "FormulaSyntaxException"
        assert "position 3" in error["message"]
        assert error["details"] == {"position": 3, "text": "x ="}

    async def test_should_reject_unknown_signature(self, test_client: AsyncClient) -> None:
        response = await test_client.post(
            f"{PREFIX}/formulas/classify", json={"formula": "x = x", "signature": "peano"}
        )
        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY

    async def test_should_translate_along_a(self, test_client: AsyncClient) -> None:
        # Act
        response = await test_client.post(
            f"{PREFIX}/formulas/translate",
            json={"formula": "x in y", "interpretation": "a", "abbrev": True},
        )

        # Assert
        assert response.status_code == status.HTTP_200_OK
        data = response.json()
        assert data["formula"] == "eps(x, y)"
        assert data["target_signature"] == "arith+"
        assert data["obligations"] == ["exists x. x = x"]

    async def test_should_return_400_for_mismatched_composition(
        self, test_client: AsyncClient
    ) -> None:
        # Act
        response = await test_client.post(
            f"{PREFIX}/formulas/translate",
            json={"formula": "x in y", "interpretation": "a", "compose": ["a"]},
        )

        # Assert
        assert response.status_code == status.HTTP_400_BAD_REQUEST
        assert response.json()["error"]["type"] == "SignatureMismatchException"

    @pytest.mark.parametrize("body,expected", [
        ({"formula": "exists y. y + y = x", "signature": "arith", "env": {"x": 6}}, "True"),
        ({"formula": "exists y. y + y = x", "signature": "arith", "env": {"x": 7}}, "Unknown"),
        ({"formula": "x in y", "env": {"x": 0, "y": 1}}, "True"),
    ])
    async def test_should_evaluate_formula(
        self, test_client: AsyncClient, body: dict, expected: str
    ) -> None:
        # Act
        response = await test_client.post(f"{PREFIX}/formulas/eval", json=body)

        # Assert
        assert response.status_code == status.HTTP_200_OK
        assert response.json()["value"] == expected

    async def test_should_return_400_for_missing_assignment(
        self, test_client: AsyncClient
    ) -> None:
        # Act
        response = await test_client.post(
            f"{PREFIX}/formulas/eval", json={"formula": "x in y", "env": {"x": 0}}
        )

        # Assert
        assert response.status_code == status.HTTP_400_BAD_REQUEST
        assert response.json()["error"]["type"] == "MissingAssignmentException"


@pytest.mark.integration
@pytest.mark.asyncio
class TestStageEndpoints:
    """Test suite for the stage, axiom and round-trip endpoints."""

    async def test_should_check_stage(self, test_client: AsyncClient) -> None:
        # Act
        response = await test_client.get(f"{PREFIX}/stages/3")

        # Assert
        assert response.status_code == status.HTTP_200_OK
        data = response.json()
        assert data["bound"] == 4
        assert data["report"]["result"] == "pass"

    async def test_should_return_422_beyond_last_stage(self, test_client: AsyncClient) -> None:
        # Act
        response = await test_client.get(f"{PREFIX}/stages/6")

        # Assert
        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY
        assert response.json()["error"]["type"] == "RangeGuardException"

    async def test_should_report_failed_axiom_with_200(self, test_client: AsyncClient) -> None:
        """
        GIVEN: Pairing on D_2 without bump
        WHEN: The axiom endpoint is called
        THEN: 200 with result 'fail' and the counterexample should be returned
        """
        # Act
        response = await test_client.get(f"{PREFIX}/stages/2/axioms/pairing")

        # Assert
        assert response.status_code == status.HTTP_200_OK
        report = response.json()
        assert report["result"] == "fail"
        assert report["counterexample"] == {"x": 0, "y": 1, "z": 3, "stage": 2}

    async def test_should_pass_axiom_with_bump(self, test_client: AsyncClient) -> None:
        response = await test_client.get(f"{PREFIX}/stages/2/axioms/pairing?bump=1")
        assert response.json()["result"] == "pass"
        assert "counterexample" not in response.json()

    async def test_should_return_400_for_unknown_axiom(self, test_client: AsyncClient) -> None:
        response = await test_client.get(f"{PREFIX}/stages/2/axioms/choice")
        assert response.status_code == status.HTTP_400_BAD_REQUEST

    async def test_should_run_small_roundtrip(self, test_client: AsyncClient) -> None:
        # Act
        response = await test_client.get(f"{PREFIX}/roundtrip/ba_membership?range=4")

        # Assert
        assert response.status_code == status.HTTP_200_OK
        report = response.json()
        assert report["subject"] == "roundtrip:ba_membership"
        assert report["result"] == "pass"
        assert report["cases"] == 16

    async def test_should_return_422_for_oversized_range(self, test_client: AsyncClient) -> None:
        response = await test_client.get(f"{PREFIX}/roundtrip/ab_add?range=17")
        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY

    async def test_should_return_400_for_unknown_kind(self, test_client: AsyncClient) -> None:
        response = await test_client.get(f"{PREFIX}/roundtrip/ba_add")
        assert response.status_code == status.HTTP_400_BAD_REQUEST


@pytest.mark.integration
@pytest.mark.asyncio
class TestCorpusEndpoints:
    """Test suite for /corpus and /health over the test corpus."""

    async def test_should_report_health(self, test_client_with_test_data: AsyncClient) -> None:
        # Act
        response = await test_client_with_test_data.get(f"{PREFIX}/health")

        # Assert
        assert response.status_code == status.HTTP_200_OK
        assert response.json() == {"status": "healthy", "formulas": 6}

    async def test_should_list_corpus_with_summary(
        self, test_client_with_test_data: AsyncClient
    ) -> None:
        # Act
        response = await test_client_with_test_data.get(f"{PREFIX}/corpus")

        # Assert
        assert response.status_code == status.HTTP_200_OK
        data = response.json()
        assert data["summary"]["formulas"] == 6
        assert data["summary"]["by_signature"] == {"set": 4, "arith": 2}
        assert data["summary"]["theories"] == ["HA", "T"]
        assert len(data["formulas"]) == 6

    @pytest.mark.parametrize("query,expected", [
        ("?signature=arith", ["successor_graph", "even"]),
        ("?tag=atomic", ["member", "successor_graph"]),
        ("?signature=set&tag=atomic", ["member"]),
    ])
    async def test_should_filter_corpus(
        self, test_client_with_test_data: AsyncClient, query: str, expected: list
    ) -> None:
        # Act
        response = await test_client_with_test_data.get(f"{PREFIX}/corpus{query}")

        # Assert
        assert [f["name"] for f in response.json()["formulas"]] == expected

    async def test_should_describe_root(self, test_client: AsyncClient) -> None:
        # Act
        response = await test_client.get("/")

        # Assert
        assert response.status_code == status.HTTP_200_OK
        data = response.json()
        assert data["name"] == "hfkit"
        assert data["endpoints"]["health_check"] == f"{PREFIX}/health"
