"""Equation solving and algebraic-set classification over finite boolean
algebras.

The pipeline: parse a boolean equation system (:mod:`boolgeo.syntax`),
reduce it to its canonical orthogonal form (:mod:`boolgeo.ortho`),
enumerate or count solutions over an algebra of any rank
(:mod:`boolgeo.solve`), classify the solution set
(:mod:`boolgeo.geometry`) and verify the exact counting formulas
(:mod:`boolgeo.stats`).
"""

from .algebra import (
    MAX_RANK,
    Element,
    atoms,
    complement,
    elements,
    format_element,
    join,
    meet,
    parse_element,
)
from .errors import (
    BoolgeoError,
    InconsistentSystemError,
    LimitExceededError,
    MissingVariableError,
    ParseError,
    RankMismatchError,
    SystemMismatchError,
)
from .geometry import (
    Decomposition,
    are_isomorphic,
    coordinate_atoms,
    coordinate_rank,
    decompose,
    irr_count,
    irreducibility_rank,
    is_irreducible,
)
from .ortho import (
    DEFAULT_MAX_VARS,
    MintermIndex,
    OrthogonalSystem,
    XPoint,
    ZPoint,
    bits_to_index,
    format_minterm,
    index_to_bits,
    orthogonalize,
    truth_table,
    x_from_z,
    z_from_x,
)
from .solve import (
    count_solutions,
    eval_term,
    is_consistent,
    satisfies,
    solutions_x,
    solutions_z,
)
from .stats import (
    ExactRational,
    asymptotic_irr,
    avg_ir_rank,
    avg_irr_closed,
    avg_irr_exhaustive,
    iso_pair_asymptotic,
    iso_pair_probability,
    sample_ortho,
    sample_systems,
)
from .syntax import (
    Complement,
    Const,
    Equation,
    Join,
    Meet,
    System,
    Term,
    Var,
    format_equation,
    format_system,
    format_term,
    parse_system,
    parse_term,
)

__version__ = "0.1.0"

__all__ = [
    "BoolgeoError",
    "Complement",
    "Const",
    "Decomposition",
    "DEFAULT_MAX_VARS",
    "Element",
    "Equation",
    "ExactRational",
    "InconsistentSystemError",
    "Join",
    "LimitExceededError",
    "MAX_RANK",
    "Meet",
    "MintermIndex",
    "MissingVariableError",
    "OrthogonalSystem",
    "ParseError",
    "RankMismatchError",
    "System",
    "SystemMismatchError",
    "Term",
    "Var",
    "XPoint",
    "ZPoint",
    "are_isomorphic",
    "asymptotic_irr",
    "atoms",
    "avg_ir_rank",
    "avg_irr_closed",
    "avg_irr_exhaustive",
    "bits_to_index",
    "complement",
    "coordinate_atoms",
    "coordinate_rank",
    "count_solutions",
    "decompose",
    "elements",
    "eval_term",
    "format_element",
    "format_equation",
    "format_minterm",
    "format_system",
    "format_term",
    "index_to_bits",
    "irr_count",
    "irreducibility_rank",
    "is_consistent",
    "is_irreducible",
    "iso_pair_asymptotic",
    "iso_pair_probability",
    "join",
    "meet",
    "orthogonalize",
    "parse_element",
    "parse_system",
    "parse_term",
    "sample_ortho",
    "sample_systems",
    "satisfies",
    "solutions_x",
    "solutions_z",
    "truth_table",
    "x_from_z",
    "z_from_x",
]
