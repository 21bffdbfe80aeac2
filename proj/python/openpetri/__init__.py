"""Open Petri nets: composition, reachability semantics and law checks."""

from ._core import (
    OpenNet,
    OpenNetError,
    ParseError,
    check_laws,
    check_lax,
    hom_nonempty,
    identity,
    one_way_experiment,
    parse,
    reach,
    reachable,
    relation,
    serialize,
)

__all__ = [
    "OpenNet",
    "OpenNetError",
    "ParseError",
    "check_laws",
    "check_lax",
    "hom_nonempty",
    "identity",
    "one_way_experiment",
    "parse",
    "reach",
    "reachable",
    "relation",
    "serialize",
]
