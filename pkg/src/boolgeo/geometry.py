"""Classify the algebraic sets defined by orthogonal systems.

For a consistent orthogonal system with s surviving minterm variables
(the system's coordinate rank), the solution set over the rank-r algebra
is irreducible exactly when s <= r.  Otherwise it splits into C(s, r)
irreducible components, one per way of forcing s - r further minterm
variables to zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .algebra import check_rank
from .errors import InconsistentSystemError, SystemMismatchError
from .ortho import MintermIndex, OrthogonalSystem
from .solve import is_consistent


@dataclass(frozen=True)
class Decomposition:
    """The irreducible components of a solution set, each given by its
    own orthogonal system (a superset of the original forced zeros)."""

    components: tuple[OrthogonalSystem, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[OrthogonalSystem]:
        return iter(self.components)

    def __getitem__(self, i: int) -> OrthogonalSystem:
        return self.components[i]


def _require_consistent(system: OrthogonalSystem) -> None:
    if not is_consistent(system):
        raise InconsistentSystemError(
            "system is inconsistent (every minterm variable is forced to zero)"
        )


def coordinate_rank(system: OrthogonalSystem) -> int:
    """Rank of the solution set's coordinate algebra: the number of
    surviving minterm variables.  Undefined for inconsistent systems."""
    _require_consistent(system)
    return system.num_minterms - system.num_zeroed


def coordinate_atoms(system: OrthogonalSystem) -> tuple[MintermIndex, ...]:
    """The surviving minterm indices, ascending; their classes are the
    atoms of the coordinate algebra, so the length equals
    :func:`coordinate_rank`."""
    _require_consistent(system)
    return system.surviving


def is_irreducible(system: OrthogonalSystem, rank: int) -> bool:
    """True when the (nonempty) solution set over the rank ``rank``
    algebra is not a finite proper union of algebraic sets."""
    check_rank(rank)
    return coordinate_rank(system) <= rank


def decompose(system: OrthogonalSystem, rank: int) -> Decomposition:
    """Split the solution set over the rank ``rank`` algebra into its
    irreducible components.

    Already-irreducible systems decompose as themselves.  Otherwise each
    component forces coordinate_rank - rank additional surviving minterms
    to zero; components are emitted in ascending combination order of the
    added indices and each has coordinate rank exactly ``rank``.
    """
    check_rank(rank)
    free = coordinate_rank(system)
    if free <= rank:
        return Decomposition((system,))
    components = tuple(
        OrthogonalSystem(
            system.n,
            system.zeroed_mask | _mask_of(extra),
        )
        for extra in itertools.combinations(system.surviving, free - rank)
    )
    return Decomposition(components)


def _mask_of(indices: tuple[MintermIndex, ...]) -> int:
    mask = 0
    for alpha in indices:
        mask |= 1 << alpha
    return mask


def irr_count(system: OrthogonalSystem, rank: int) -> int:
    """Number of irreducible components over the rank ``rank`` algebra:
    1 when the coordinate rank is at most ``rank``, else C(s, rank).

    Inconsistent systems are accepted and count as 1; this matches the
    averaging convention in :mod:`boolgeo.stats`, which weighs every
    forced-zero set equally, empty solution set included.
    """
    check_rank(rank)
    free = system.num_minterms - system.num_zeroed
    if free <= rank:
        return 1
    return comb(free, rank)


def irreducibility_rank(system: OrthogonalSystem) -> int:
    """Least algebra rank at which the solution set is irreducible:
    the count of surviving minterms, or 0 for inconsistent systems."""
    if not is_consistent(system):
        return 0
    return system.num_minterms - system.num_zeroed


def are_isomorphic(first: OrthogonalSystem, second: OrthogonalSystem) -> bool:
    """True when the two solution sets have isomorphic coordinate
    algebras, i.e. equally many forced-zero minterms.  Both systems must
    share the same variable count."""
    if first.n != second.n:
        raise SystemMismatchError(
            f"cannot compare systems over different variable counts "
            f"({first.n} vs {second.n})"
        )
    return first.num_zeroed == second.num_zeroed
