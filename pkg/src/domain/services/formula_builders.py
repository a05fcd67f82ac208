"""
Builders for the set-theoretic formulas the interpretations are made of.

Everything here produces ∈/= formulas whose quantifiers are bounded by
variables: Kuratowski pairs, functions given as sets of pairs, domains,
successors, emptiness and transitivity. The unbounded parts of the graph
formulas are added by the interpretations module.

An implication whose consequent may be unbounded is written ¬A ∨ B, so
that it stays in E_1 when A is bounded.
"""

from functools import reduce

from src.domain.models.formula import (
    And,
    App,
    Atom,
    BExists,
    BForall,
    Bound,
    Eq,
    Formula,
    Or,
    Term,
    Var,
    ZERO,
    neg,
)


def mem(a: str, b: str) -> Formula:
    return Atom("in", (Var(a), Var(b)))


def eq(a: str, b: str) -> Formula:
    return Eq(Var(a), Var(b))


def conj(*formulas: Formula) -> Formula:
    return reduce(And, formulas)


def disj(*formulas: Formula) -> Formula:
    return reduce(Or, formulas)


def unless(condition: Formula, formula: Formula) -> Formula:
    """condition → formula, rendered as ¬condition ∨ formula."""
    return Or(neg(condition), formula)


def all_in(var: str, bound: str, body: Formula) -> Formula:
    return BForall(var, Bound("in", Var(bound)), body)


def some_in(var: str, bound: str, body: Formula) -> Formula:
    return BExists(var, Bound("in", Var(bound)), body)


def is_empty(a: str, scratch: str = "e_0") -> Formula:
    """∀q∈a. q ≠ q"""
    return all_in(scratch, a, neg(eq(scratch, scratch)))


def is_singleton(s: str, a: str, scratch: str = "q_0") -> Formula:
    """s = {a}"""
    return And(mem(a, s), all_in(scratch, s, eq(scratch, a)))


def is_pair_set(s: str, a: str, b: str, scratch: str = "q_0") -> Formula:
    """s = {a, b}"""
    return conj(
        mem(a, s), mem(b, s), all_in(scratch, s, Or(eq(scratch, a), eq(scratch, b)))
    )


def is_op(p: str, a: str, b: str) -> Formula:
    """
    p = ⟨a, b⟩ = {{a}, {a, b}}.

    Holds also when a = b, where p = {{a}}.
    """
    return And(
        some_in("s_0", p, some_in("t_0", p, And(is_singleton("s_0", a), is_pair_set("t_0", a, b)))),
        all_in("q_1", p, Or(is_singleton("q_1", a), is_pair_set("q_1", a, b))),
    )


def pair_in(f: str, a: str, b: str) -> Formula:
    """⟨a, b⟩ ∈ f, i.e. f(a) = b when f is a function."""
    return some_in("p_0", f, is_op("p_0", a, b))


def for_each_pair(f: str, a: str, b: str, body: Formula, tag: str = "1") -> Formula:
    """
    ∀⟨a, b⟩ ∈ f. body

    The components are reached through the members of the pair, so the
    whole quantifier is bounded.
    """
    p, s, t = f"p_{tag}", f"s_{tag}", f"t_{tag}"
    return all_in(
        p, f, all_in(s, p, all_in(a, s, all_in(t, p, all_in(b, t, unless(is_op(p, a, b), body)))))
    )


def has_image(f: str, a: str, tag: str = "2") -> Formula:
    """∃b. ⟨a, b⟩ ∈ f"""
    p, t, b = f"p_{tag}", f"t_{tag}", f"b_{tag}"
    return some_in(p, f, some_in(t, p, some_in(b, t, is_op(p, a, b))))


def image_in(f: str, a: str, body: Formula, image: str, tag: str = "3") -> Formula:
    """∃⟨a, image⟩ ∈ f with image ranging over the members of its pair."""
    p, t = f"p_{tag}", f"t_{tag}"
    return some_in(p, f, some_in(t, p, some_in(image, t, And(is_op(p, a, image), body))))


def is_function(f: str) -> Formula:
    """
    f is a set of ordered pairs, single-valued.
    """
    every_pair = all_in(
        "p_4",
        f,
        some_in("s_4", "p_4", some_in("a_4", "s_4", some_in("t_4", "p_4", some_in("b_4", "t_4", is_op("p_4", "a_4", "b_4"))))),
    )
    single_valued = for_each_pair(
        f, "a_5", "b_5",
        for_each_pair(f, "a_6", "b_6", unless(eq("a_5", "a_6"), eq("b_5", "b_6")), tag="6"),
        tag="5",
    )
    return And(every_pair, single_valued)


def is_successor(x: str, y: str, scratch: str = "z_0") -> Formula:
    """y = x ∪ {x}"""
    return conj(
        all_in(scratch, y, Or(mem(scratch, x), eq(scratch, x))),
        all_in(scratch, x, mem(scratch, y)),
        mem(x, y),
    )


def is_transitive(x: str, tag: str = "7") -> Formula:
    a, b = f"a_{tag}", f"b_{tag}"
    return all_in(a, x, all_in(b, a, mem(b, x)))


def domain_is_successor(f: str, y: str) -> Formula:
    """dom f = y ∪ {y}"""
    inside = for_each_pair(f, "a_8", "b_8", Or(mem("a_8", y), eq("a_8", y)), tag="8")
    covers = all_in("k_8", y, has_image(f, "k_8", tag="9"))
    return conj(inside, covers, has_image(f, y, tag="10"))


def numeral(k: int) -> Term:
    """S(S(...S(0)...)) with k applications."""
    term: Term = ZERO
    for _ in range(k):
        term = App("S", (term,))
    return term


def add(left: Term, right: Term) -> Term:
    return App("+", (left, right))


def mul(left: Term, right: Term) -> Term:
    return App("*", (left, right))


def power(base: Term, exponent: Term) -> Term:
    return App("exp", (base, exponent))
