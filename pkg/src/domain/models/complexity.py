"""
Complexity levels of the E_n / U_n hierarchy.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

HierarchyClass = Literal["E", "U"]


class ComplexityLevel(BaseModel):
    """
    Least syntactic levels of a formula in the E_n and U_n classes.

    Attributes:
        e_level: Least n with the formula in E_n
        u_level: Least n with the formula in U_n
    """

    model_config = ConfigDict(frozen=True)

    e_level: int = Field(..., ge=0, description="Least n with the formula in E_n")
    u_level: int = Field(..., ge=0, description="Least n with the formula in U_n")

    @model_validator(mode="after")
    def validate_cross_inclusions(self) -> "ComplexityLevel":
        """
        Enforce U_{n-1} ⊆ E_n and E_{n-1} ⊆ U_n, and that level 0 is shared.
        """
        if self.e_level > self.u_level + 1 or self.u_level > self.e_level + 1:
            raise ValueError(
                f"Levels E={self.e_level} U={self.u_level} are more than one apart"
            )
        if (self.e_level == 0) != (self.u_level == 0):
            raise ValueError("Level 0 is shared by E and U")
        return self

    @property
    def is_bounded(self) -> bool:
        return self.e_level == 0

    def level(self, cls: HierarchyClass) -> int:
        return self.e_level if cls == "E" else self.u_level

    def __str__(self) -> str:
        return f"E={self.e_level} U={self.u_level}"
