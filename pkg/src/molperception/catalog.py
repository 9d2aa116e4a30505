"""The built-in reaction automata.

``GENERIC``
    Deterministic enzyme cycle over ``{s, c, p, r}`` (substrate, coenzyme,
    product, coenzyme-conversion result). Free enzyme ``E`` is both initial
    and final, so accepted words are sequences of complete catalytic cycles.
``PERCEPTION``
    The same cycle with perceiving states (``E_s``, ``E_c``, ``Es_c``,
    ``Ec_s``) in which a cognate molecule is sensed but not yet bound, and
    epsilon moves back to the stable state they came from.
``PFK``
    Phosphofructokinase: ``PERCEPTION`` with F6P, ATP, F16bP and ADP in the
    roles of s, c, p and r. It has no substrate-only pathway, so the
    ``E_s -s-> ES`` and ``ES -p-> E`` shortcuts have no counterpart.
"""

from __future__ import annotations

from .automata import EPSILON, Automaton
from .errors import CatalogError

SUBSTRATE, COENZYME, PRODUCT, COENZYME_RESULT = "s", "c", "p", "r"

GENERIC_TABLE = {
    ("E", "s"): "Es",
    ("E", "c"): "Ec",
    ("Es", "c"): "Esc",
    ("Es", "p"): "E",
    ("Ec", "s"): "Esc",
    ("Esc", "p"): "Er",
    ("Esc", "r"): "Ep",
    ("Ep", "p"): "E",
    ("Er", "r"): "E",
}

PERCEPTION_STABLE = ("E", "Ec", "Ep", "Er", "Es", "ES")
PERCEPTION_PERCEIVING = ("E_c", "Ec_s", "E_s", "Es_c")

PERCEPTION_TABLE = {
    ("E", "s"): {"E_s"},
    ("E", "c"): {"E_c"},
    ("E", EPSILON): {"E"},
    ("Es", "c"): {"Es_c"},
    ("Es", EPSILON): {"Es"},
    ("Ec", "s"): {"Ec_s"},
    ("Ec", EPSILON): {"Ec"},
    ("ES", "p"): {"Er", "E"},
    ("ES", "r"): {"Ep"},
    ("Ep", "p"): {"E"},
    ("Er", "r"): {"E"},
    ("E_s", "s"): {"Es", "ES"},
    ("E_s", EPSILON): {"E"},
    ("Es_c", "c"): {"ES"},
    ("Es_c", EPSILON): {"Es"},
    ("E_c", "c"): {"Ec"},
    ("E_c", EPSILON): {"E"},
    ("Ec_s", "s"): {"ES"},
    ("Ec_s", EPSILON): {"Ec"},
}

PFK_SYMBOLS = {"s": "F6P", "c": "ATP", "p": "F16bP", "r": "ADP"}

PFK_STABLE = ("PFK", "PFKATP", "PFKF16bP", "PFKADP", "PFKF6P", "PFKATPF6P")
PFK_PERCEIVING = ("PFK_ATP", "PFKATP_F6P", "PFK_F6P", "PFKF6P_ATP")

PFK_EDGES = (
    ("PFK", "F6P", "PFK_F6P"),
    ("PFK", "ATP", "PFK_ATP"),
    ("PFK_ATP", EPSILON, "PFK"),
    ("PFK_F6P", EPSILON, "PFK"),
    ("PFK_ATP", "ATP", "PFKATP"),
    ("PFK_F6P", "F6P", "PFKF6P"),
    ("PFKATP", EPSILON, "PFKATP"),
    ("PFKF6P", EPSILON, "PFKF6P"),
    ("PFKATP", "F6P", "PFKATP_F6P"),
    ("PFKF6P", "ATP", "PFKF6P_ATP"),
    ("PFKATP_F6P", EPSILON, "PFKATP"),
    ("PFKF6P_ATP", EPSILON, "PFKF6P"),
    ("PFKF6P_ATP", "ATP", "PFKATPF6P"),
    ("PFKATP_F6P", "F6P", "PFKATPF6P"),
    ("PFKATPF6P", "F16bP", "PFKADP"),
    ("PFKATPF6P", "ADP", "PFKF16bP"),
    ("PFKADP", "ADP", "PFK"),
    ("PFKF16bP", "F16bP", "PFK"),
    ("PFK", EPSILON, "PFK"),
)


def generic() -> Automaton:
    return Automaton.from_table(GENERIC_TABLE, initial="E", finals={"E"}, alphabet="scpr")


def perception() -> Automaton:
    return Automaton.from_table(
        PERCEPTION_TABLE,
        initial="E",
        finals={"E"},
        alphabet="scpr",
        stable=PERCEPTION_STABLE,
        perceiving=PERCEPTION_PERCEIVING,
    )


def pfk() -> Automaton:
    return Automaton(
        states=PFK_STABLE + PFK_PERCEIVING,
        alphabet=PFK_SYMBOLS.values(),
        edges=PFK_EDGES,
        initial="PFK",
        finals={"PFK"},
        stable=PFK_STABLE,
        perceiving=PFK_PERCEIVING,
    )


MACHINES = {"GENERIC": generic, "PERCEPTION": perception, "PFK": pfk}


def names() -> list:
    return list(MACHINES)


def catalog(name: str) -> Automaton:
    try:
        return MACHINES[name]()
    except KeyError:
        raise CatalogError(f"unknown catalog machine {name!r}; choose from {', '.join(MACHINES)}") from None


ROLE_MAPS = {
    "GENERIC": {"s": "s", "c": "c", "p": "p", "r": "r"},
    "PERCEPTION": {"s": "s", "c": "c", "p": "p", "r": "r"},
    "PFK": {v: k for k, v in PFK_SYMBOLS.items()},
}


def known_roles(a: Automaton):
    """Symbol -> role map (``s``, ``c``, ``p``, ``r``) when `a` is a catalog machine, else None."""
    for name, build in MACHINES.items():
        if a == build():
            return dict(ROLE_MAPS[name])
    return None
