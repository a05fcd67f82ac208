"""
Interpretation specifications.

An interpretation of a source language in a target language is given by
a domain formula π_∀(x), a formula π_P(x₀..x_{n-1}) per source predicate
and a graph formula π_f(x₀..x_{n-1}, y) per source function symbol, all
over the target signature. Each formula is stored as a Macro template
applied to its own parameters.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Literal, Optional

from src.domain.models.formula import Macro
from src.domain.models.signature import Signature

BoundStrategy = Literal["keep", "ackermann", "ordinal", "below", "compose"]


def _identity(value: Any) -> Any:
    return value


@dataclass(frozen=True)
class InterpretationSpec:
    """
    Relativizing translation between two signatures.

    Attributes:
        name: Short name ('a', 'o', 'b', 'identity(set)', 'b∘a', ...)
        source: Signature of the translated formulas
        target: Signature of the translations
        domain: Template π_∀ with one parameter
        predicate_map: Template π_P per source predicate
        function_map: Graph template π_f per source function symbol; its
            last parameter is the value
        bounded: How bounded quantifiers are rendered in the target
        unfold_terms: Whether atoms are unfolded through the graphs; the
            identity interpretation keeps terms as they are
        to_source: Reads a target value as the source value it stands for
            (None outside the domain)
        from_source: Maps a source value to the target value representing it
        below: For the 'below' strategy, the template Below(w, b) stating
            that b is the set of everything below w
        complement: For the 'ackermann' strategy, the template deciding
            that its first argument is not a member of its second
        components: (outer, inner) for a composed interpretation
    """

    name: str
    source: Signature
    target: Signature
    domain: Macro
    predicate_map: dict[str, Macro] = field(default_factory=dict)
    function_map: dict[str, Macro] = field(default_factory=dict)
    bounded: BoundStrategy = "keep"
    unfold_terms: bool = True
    to_source: Callable[[Any], Any] = field(default=_identity, compare=False)
    from_source: Callable[[Any], Any] = field(default=_identity, compare=False)
    below: Optional[Macro] = None
    complement: Optional[Macro] = None
    components: Optional[tuple["InterpretationSpec", "InterpretationSpec"]] = None

    def __hash__(self) -> int:
        return hash(self.name)

    @property
    def is_identity(self) -> bool:
        return not self.unfold_terms
