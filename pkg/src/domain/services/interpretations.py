"""
The three concrete interpretations between arithmetic and HF set theory.

a:  sets in arithmetic. A set is its Ackermann code; a ∈ b becomes the
    bounded arithmetic formula saying bit a of b is 1.
o:  arithmetic in sets through the von Neumann ordinals. The domain is
    the formula defining the finite ordinals and +, ·, exp are given by
    graphs asserting a witness function for their recursion.
b:  arithmetic in sets through Ackermann codes. A number n is the set
    with code n; its graphs go through o via the graph P of the map
    sending a set to the von Neumann ordinal of its code.

Every template carries an Oracle deciding it on codes or numbers, so
translations can be evaluated without searching for witness functions.
"""

import logging
from functools import lru_cache

from src.domain.models.formula import (
    And,
    App,
    BExists,
    Bound,
    Eq,
    Exists,
    Formula,
    Macro,
    Oracle,
    Var,
    template,
)
from src.domain.models.interpretation import InterpretationSpec
from src.domain.models.exceptions import UnknownSymbolException
from src.domain.models.signature import ARITH_PLUS, SET, get_signature
from src.domain.services.evaluator import apply_function
from src.domain.services.formula_builders import (
    add,
    all_in,
    conj,
    disj,
    domain_is_successor,
    eq,
    for_each_pair,
    has_image,
    image_in,
    is_empty,
    is_function,
    is_op,
    is_successor,
    is_transitive,
    mem,
    mul,
    numeral,
    pair_in,
    power,
    some_in,
    unless,
)
from src.domain.services.hf_core import adjoin, eps, is_von_neumann, power_of_two, v
from src.domain.services.interpretation_engine import identity, translate

logger = logging.getLogger(__name__)

GRAPH_KINDS = {"add": "+", "mul": "*", "exp": "exp"}


def _ordinals(*codes: int) -> tuple[int, ...] | None:
    indices = tuple(is_von_neumann(code) for code in codes)
    return None if any(i is None for i in indices) else indices


def _x_eq_x() -> Macro:
    return template("dom", ("x",), Eq(Var("x"), Var("x")))


# ==================== Arithmetic side ====================


def _bit_formula(a: Var, b: Var, odd: bool) -> Formula:
    """∃r<2^a ∃m<b+1. b = (2m + odd)·2^a + r"""
    two = numeral(2)
    block = power(two, a)
    high = mul(two, Var("m"))
    if odd:
        high = add(high, numeral(1))
    return BExists(
        "r",
        Bound("<", block),
        BExists(
            "m",
            Bound("<", App("S", (b,))),
            Eq(b, add(mul(high, block), Var("r"))),
        ),
    )


@lru_cache(maxsize=None)
def eps_formula() -> Macro:
    """
    a ε b over arithmetic, with both quantifiers bounded.
    """
    return template(
        "eps",
        ("a", "b"),
        _bit_formula(Var("a"), Var("b"), odd=True),
        Oracle("eps", eps),
    )


@lru_cache(maxsize=None)
def bit_zero_formula() -> Macro:
    """Bit a of b is 0."""
    return template(
        "bit_zero",
        ("a", "b"),
        _bit_formula(Var("a"), Var("b"), odd=False),
        Oracle("bit_zero", lambda a, b: not eps(a, b)),
    )


# ==================== Set side ====================


@lru_cache(maxsize=None)
def omega_formula() -> Macro:
    """
    x is a von Neumann natural number.

    x is transitive, its members are transitive, and x and each of its
    members is empty or the successor of one of its own members.
    """
    def empty_or_successor(name: str, tag: str) -> Formula:
        return disj(
            is_empty(name, f"e_{tag}"),
            some_in(f"g_{tag}", name, is_successor(f"g_{tag}", name, f"z_{tag}")),
        )

    body = conj(
        is_transitive("x", tag="30"),
        all_in("a_31", "x", is_transitive("a_31", tag="32")),
        all_in("a_33", "x", empty_or_successor("a_33", "34")),
        empty_or_successor("x", "35"),
    )
    return template("omega", ("x",), body, Oracle("omega", lambda x: is_von_neumann(x) is not None))


@lru_cache(maxsize=None)
def zero_formula() -> Macro:
    """y = ∅"""
    return template(
        "zero",
        ("y",),
        is_empty("y", "z_0"),
        Oracle("zero", lambda y: y == 0, lambda: 0),
    )


@lru_cache(maxsize=None)
def successor_formula() -> Macro:
    """y = x ∪ {x}"""
    return template(
        "succ",
        ("x", "y"),
        is_successor("x", "y"),
        Oracle("succ", lambda x, y: y == adjoin(x, x), lambda x: adjoin(x, x)),
    )


def _base_value(kind: str, value: str, x: str) -> Formula:
    if kind == "add":
        return eq(value, x)
    if kind == "mul":
        return is_empty(value, "e_12")
    # {∅}
    return And(
        some_in("e_12", value, is_empty("e_12", "e_13")),
        all_in("e_14", value, is_empty("e_14", "e_15")),
    )


def _step(kind: str, previous: str, following: str, x: str) -> Formula:
    if kind == "add":
        return is_successor(previous, following, "z_16")
    inner = graph_formula("add" if kind == "mul" else "mul")
    return inner.instantiate((Var(previous), Var(x), Var(following)))


@lru_cache(maxsize=None)
def graph_formula(kind: str) -> Macro:
    """
    Graph G(x, y, z) of ordinal addition, multiplication or exponentiation.

    G says x and y are natural numbers and some function f with domain
    y ∪ {y} follows the recursion on its second argument and sends y to z:
    f(0) is x, ∅ or {∅}, and f(k ∪ {k}) is f(k) ∪ {f(k)}, f(k) + x or
    f(k) · x. The step of mul and exp uses the graph of the operation
    below it.

    Args:
        kind: 'add', 'mul' or 'exp'

    Returns:
        The template with its oracle
    """
    omega = omega_formula()
    base = for_each_pair("f", "a_11", "b_11", unless(is_empty("a_11", "e_11"), _base_value(kind, "b_11", "x")), tag="11")
    follow = conj(
        is_op("q_17", "k_18", "c_18"),
        is_successor("k_17", "k_18", "z_18"),
        _step(kind, "c_17", "c_18", "x"),
    )
    step = for_each_pair(
        "f",
        "k_17",
        "c_17",
        unless(
            mem("k_17", "y"),
            some_in("q_17", "f", some_in("s_18", "q_17", some_in("k_18", "s_18", some_in("t_18", "q_17", some_in("c_18", "t_18", follow))))),
        ),
        tag="17",
    )
    witness = conj(pair_in("f", "y", "z"), is_function("f"), domain_is_successor("f", "y"), base, step)
    body = conj(
        omega.instantiate((Var("x"),)),
        omega.instantiate((Var("y"),)),
        Exists("f", witness),
    )

    def holds(x: int, y: int, z: int) -> bool:
        indices = _ordinals(x, y, z)
        if indices is None:
            return False
        nx, ny, nz = indices
        return nz == apply_function(GRAPH_KINDS[kind], (nx, ny))

    def compute(x: int, y: int) -> int | None:
        indices = _ordinals(x, y)
        if indices is None:
            return None
        return v(apply_function(GRAPH_KINDS[kind], indices))

    return template(f"{kind}_graph", ("x", "y", "z"), body, Oracle(f"{kind}_graph", holds, compute))


@lru_cache(maxsize=None)
def p_graph_formula() -> Macro:
    """
    Graph P(x, y) of the map sending a set to the ordinal of its code.

    P says some function g is defined on x and on everything below x,
    sends x to y, and sends each u in its domain to the natural number n
    whose binary digits are set exactly at the values g takes on the
    members of u.
    """
    eps_o = translate(interp_o(), eps_formula())
    bit_zero_o = translate(interp_o(), bit_zero_formula())

    images_are_digits = all_in(
        "d_21",
        "u_20",
        image_in("g", "d_21", eps_o.instantiate((Var("i_21"), Var("n_20"))), "i_21", tag="21"),
    )
    digits_are_images = all_in(
        "i_22",
        "n_20",
        disj(
            bit_zero_o.instantiate((Var("i_22"), Var("n_20"))),
            some_in("d_22", "u_20", image_in("g", "d_22", eq("j_22", "i_22"), "j_22", tag="22")),
        ),
    )
    per_pair = for_each_pair(
        "g",
        "u_20",
        "n_20",
        conj(omega_formula().instantiate((Var("n_20"),)), images_are_digits, digits_are_images),
        tag="20",
    )
    members_in_domain = for_each_pair(
        "g", "u_23", "n_23", all_in("d_23", "u_23", has_image("g", "d_23", tag="24")), tag="23"
    )
    below_x = for_each_pair(
        "g",
        "u_25",
        "n_25",
        disj(
            eq("u_25", "x"),
            some_in("p_26", "g", some_in("s_26", "p_26", some_in("u_26", "s_26", some_in("t_26", "p_26", some_in("n_26", "t_26", And(is_op("p_26", "u_26", "n_26"), mem("u_25", "u_26")))))))
        ),
        tag="25",
    )
    witness = conj(pair_in("g", "x", "y"), is_function("g"), members_in_domain, below_x, per_pair)

    def compute(x: int) -> int:
        return v(x)

    return template(
        "p_graph",
        ("x", "y"),
        Exists("g", witness),
        Oracle("p_graph", lambda x, y: is_von_neumann(y) == x, compute),
    )


@lru_cache(maxsize=None)
def ones_formula() -> Macro:
    """m = 2^k - 1 on natural numbers."""
    exp_graph = graph_formula("exp")
    zero, succ = zero_formula(), successor_formula()
    body = Exists(
        "z",
        And(
            zero.instantiate((Var("z"),)),
            Exists(
                "o",
                And(
                    succ.instantiate((Var("z"), Var("o"))),
                    Exists(
                        "t",
                        And(
                            succ.instantiate((Var("o"), Var("t"))),
                            Exists("e", And(exp_graph.instantiate((Var("t"), Var("k"), Var("e"))), is_successor("m", "e"))),
                        ),
                    ),
                ),
            ),
        ),
    )

    def holds(k: int, m: int) -> bool:
        indices = _ordinals(k, m)
        return indices is not None and indices[1] == 2 ** indices[0] - 1

    def compute(k: int) -> int | None:
        indices = _ordinals(k)
        return None if indices is None else v(2 ** indices[0] - 1)

    return template("ones", ("k", "m"), body, Oracle("ones", holds, compute))


@lru_cache(maxsize=None)
def below_formula() -> Macro:
    """b is the set whose members are exactly the codes below w."""
    p_graph = p_graph_formula()
    body = Exists(
        "k",
        And(
            p_graph.instantiate((Var("w"), Var("k"))),
            Exists(
                "m",
                And(
                    p_graph.instantiate((Var("b"), Var("m"))),
                    ones_formula().instantiate((Var("k"), Var("m"))),
                ),
            ),
        ),
    )
    return template(
        "below",
        ("w", "b"),
        body,
        Oracle("below", lambda w, b: b == power_of_two(w) - 1, lambda w: power_of_two(w) - 1),
    )


# ==================== Interpretations ====================


@lru_cache(maxsize=None)
def interp_a() -> InterpretationSpec:
    """HF sets in arithmetic through the Ackermann coding."""
    return InterpretationSpec(
        name="a",
        source=SET,
        target=ARITH_PLUS,
        domain=_x_eq_x(),
        predicate_map={"in": eps_formula()},
        bounded="ackermann",
        complement=bit_zero_formula(),
    )


@lru_cache(maxsize=None)
def interp_o() -> InterpretationSpec:
    """Arithmetic in HF sets through the von Neumann ordinals."""
    return InterpretationSpec(
        name="o",
        source=ARITH_PLUS,
        target=SET,
        domain=omega_formula(),
        function_map={
            "0": zero_formula(),
            "S": successor_formula(),
            "+": graph_formula("add"),
            "*": graph_formula("mul"),
            "exp": graph_formula("exp"),
        },
        bounded="ordinal",
        to_source=is_von_neumann,
        from_source=v,
    )


def _b_graph(symbol: str, arity: int) -> Macro:
    """
    π_f(x⃗, y) ≡ ∃u⃗ ∃w (P(x_i, u_i) ∧ π_f^o(u⃗, w) ∧ P(y, w)), nested so
    that each witness sits next to the graph that determines it.
    """
    p_graph = p_graph_formula()
    inputs = tuple(f"x{i}" for i in range(arity))
    ordinals = tuple(Var(f"u{i}") for i in range(arity))
    core: Formula = Exists(
        "w",
        And(
            interp_o().function_map[symbol].instantiate((*ordinals, Var("w"))),
            p_graph.instantiate((Var("y"), Var("w"))),
        ),
    )
    for name, ordinal in reversed(list(zip(inputs, ordinals))):
        core = Exists(ordinal.name, And(p_graph.instantiate((Var(name), ordinal)), core))

    def holds(*values: int) -> bool:
        return values[-1] == apply_function(symbol, values[:-1])

    def compute(*values: int) -> int:
        return apply_function(symbol, values)

    return template(f"{symbol}_b", (*inputs, "y"), core, Oracle(f"{symbol}_b", holds, compute))


@lru_cache(maxsize=None)
def interp_b() -> InterpretationSpec:
    """Arithmetic in HF sets through the Ackermann coding."""
    return InterpretationSpec(
        name="b",
        source=ARITH_PLUS,
        target=SET,
        domain=_x_eq_x(),
        function_map={
            symbol: _b_graph(symbol, arity) for symbol, arity in ARITH_PLUS.functions.items()
        },
        bounded="below",
        below=below_formula(),
    )


def get_interpretation(name: str) -> InterpretationSpec:
    """
    Look up a built-in interpretation.

    Args:
        name: 'a', 'o', 'b' or 'identity(<signature>)'

    Raises:
        UnknownSymbolException: For any other name
    """
    builders = {"a": interp_a, "o": interp_o, "b": interp_b}
    if name in builders:
        return builders[name]()
    if name.startswith("identity(") and name.endswith(")"):
        return identity(get_signature(name[len("identity("):-1]))
    raise UnknownSymbolException(name, "interpretations")
