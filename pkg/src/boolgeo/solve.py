"""Enumerate, count and test solutions over a finite boolean algebra.

The engine rests on one fact: a point satisfies the orthogonal equations
(disjointness plus cover, with some minterm variables forced to zero)
exactly when it distributes the algebra's r atoms among the surviving
minterm variables.  Solutions of an orthogonal system with s surviving
minterms over rank r are therefore the s**r atom assignments.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Mapping

from .algebra import Element, check_rank
from .errors import MissingVariableError
from .ortho import (
    OrthogonalSystem,
    XPoint,
    ZPoint,
    orthogonalize,
    x_from_z,
)
from .syntax import Complement, Const, Join, Meet, System, Term, Var

# Maps atom index 0..r-1 to the surviving minterm index receiving that
# atom; one assignment corresponds to one solution point.
AtomAssignment = tuple[int, ...]


def _point_rank(point) -> int:
    if isinstance(point, XPoint):
        return point.rank
    for value in point.values() if isinstance(point, Mapping) else ():
        return value.rank
    raise ValueError("cannot infer algebra rank from an empty point")


def eval_term(t: Term, point) -> Element:
    """Evaluate ``t`` at ``point`` (an :class:`XPoint` or a nonempty
    mapping from variable names to elements of one algebra)."""
    rank = _point_rank(point)

    def walk(node: Term) -> Element:
        if isinstance(node, Var):
            try:
                return point[node.name]
            except KeyError:
                raise MissingVariableError(
                    f"point has no value for variable {node.name!r}"
                ) from None
        if isinstance(node, Const):
            return Element.one(rank) if node.value else Element.zero(rank)
        if isinstance(node, Join):
            return walk(node.left) | walk(node.right)
        if isinstance(node, Meet):
            return walk(node.left) & walk(node.right)
        if isinstance(node, Complement):
            return ~walk(node.term)
        raise TypeError(f"not a term: {node!r}")

    return walk(t)


def satisfies(system: System, point) -> bool:
    """True when every equation's sides evaluate equal at ``point``."""
    return all(
        eval_term(eq.lhs, point) == eval_term(eq.rhs, point)
        for eq in system.equations
    )


def is_consistent(system: OrthogonalSystem) -> bool:
    """True when the system has solutions over some (equivalently, any)
    boolean algebra: at least one minterm variable survives."""
    return system.num_zeroed < system.num_minterms


def count_solutions(system: OrthogonalSystem, rank: int) -> int:
    """Exact number of solutions over the rank ``rank`` algebra:
    (surviving minterms) ** rank, as an unbounded integer."""
    check_rank(rank)
    return (system.num_minterms - system.num_zeroed) ** rank


def solutions_z(system: OrthogonalSystem, rank: int) -> Iterator[ZPoint]:
    """Yield every minterm-space solution over the rank ``rank`` algebra.

    Points are generated lazily in lexicographic atom-assignment order:
    atom 0 varies slowest, candidate minterm indices ascending.  The
    stream is empty iff the system is inconsistent.
    """
    check_rank(rank)
    surviving = system.surviving
    m = system.num_minterms
    for assignment in itertools.product(surviving, repeat=rank):
        masks = [0] * m
        for atom, alpha in enumerate(assignment):
            masks[alpha] |= 1 << atom
        yield ZPoint(system.n, tuple(Element(mask, rank) for mask in masks))


def solutions_x(
    system: System, rank: int, *, max_vars: int | None = None
) -> Iterator[XPoint]:
    """Yield every variable-space solution of ``system`` over the rank
    ``rank`` algebra, duplicate-free and in a deterministic order.

    Implemented by orthogonalizing and mapping each minterm-space
    solution back; the stream length equals :func:`count_solutions` of
    the orthogonal form.
    """
    ortho_system = orthogonalize(system, max_vars=max_vars)
    for zpoint in solutions_z(ortho_system, rank):
        yield x_from_z(zpoint, system.variables)
