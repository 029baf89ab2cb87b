"""Canonical orthogonal form of equation systems.

A system in n variables is equivalent to one over the 2**n minterm
variables, in which each minterm variable is either forced to zero or
left free, subject to the implicit pairwise-disjointness and cover
equations.  The whole system is therefore captured by the set of
forced-zero minterm indices.

Minterm index bit layout (``lsb-first``): a minterm is identified by an
n-bit word whose bit i-1 holds the exponent of variable x_i, so the
tuple (a_1, ..., a_n) maps to the integer sum(a_i << (i-1)).  The word
``alpha`` ranges over 0 .. 2**n - 1.  This layout is fixed across the
library, the JSON wire format and the CLI.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .algebra import Element
from .errors import (
    LimitExceededError,
    MissingVariableError,
    ParseError,
    SystemMismatchError,
)
from .syntax import Complement, Const, Join, Meet, System, Term, Var, parse_system

MintermIndex = int

DEFAULT_MAX_VARS = 16
MAX_VARS_ENV = "BOOLGEO_MAX_VARS"

# Hard representation ceiling: 2**20 minterm bits.  Past this the
# orthogonal form itself, not any algorithm on it, is the bottleneck.
HARD_MAX_VARS = 20


def max_vars_limit() -> int:
    """Effective default variable limit; BOOLGEO_MAX_VARS overrides."""
    raw = os.environ.get(MAX_VARS_ENV)
    if raw is None:
        return DEFAULT_MAX_VARS
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_VARS_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{MAX_VARS_ENV} must be >= 1, got {value}")
    return value


def index_to_bits(alpha: MintermIndex, n: int) -> tuple[int, ...]:
    """The exponent tuple (a_1, ..., a_n) encoded by ``alpha``."""
    if not 0 <= alpha < (1 << n):
        raise ValueError(f"minterm index {alpha} out of range for n={n}")
    return tuple((alpha >> i) & 1 for i in range(n))


def bits_to_index(bits: Iterable[int]) -> MintermIndex:
    """Inverse of :func:`index_to_bits`."""
    alpha = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"exponents must be 0 or 1, got {b!r}")
        alpha |= b << i
    return alpha


def format_minterm(alpha: MintermIndex, n: int) -> str:
    """Human-readable minterm variable name, e.g. ``z_(0,1)``."""
    return "z_(" + ",".join(str(b) for b in index_to_bits(alpha, n)) + ")"


@dataclass(frozen=True)
class OrthogonalSystem:
    """The canonical form of a system: variable count ``n`` plus the set
    of forced-zero minterm indices, stored as a 2**n-bit mask.

    The disjointness equations between distinct minterm variables and the
    cover equation (their join equals 1) are implicit and never stored.
    """

    n: int
    zeroed_mask: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"variable count must be a positive int, got {self.n!r}")
        if self.n > HARD_MAX_VARS:
            raise LimitExceededError(
                f"{self.n} variables exceed the hard representation cap "
                f"({HARD_MAX_VARS}); the orthogonal form would need 2**{self.n} minterms"
            )
        if self.zeroed_mask < 0 or self.zeroed_mask.bit_length() > (1 << self.n):
            raise ValueError("forced-zero mask out of range for the minterm space")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[MintermIndex]) -> "OrthogonalSystem":
        mask = 0
        for alpha in indices:
            if not 0 <= alpha < (1 << n):
                raise ValueError(f"minterm index {alpha} out of range for n={n}")
            mask |= 1 << alpha
        return cls(n, mask)

    @property
    def num_minterms(self) -> int:
        """Size of the minterm variable space, 2**n."""
        return 1 << self.n

    @property
    def num_zeroed(self) -> int:
        return self.zeroed_mask.bit_count()

    @property
    def zeroed(self) -> tuple[MintermIndex, ...]:
        """Forced-zero minterm indices, ascending."""
        return tuple(
            alpha for alpha in range(self.num_minterms) if (self.zeroed_mask >> alpha) & 1
        )

    @property
    def surviving(self) -> tuple[MintermIndex, ...]:
        """Minterm indices not forced to zero, ascending."""
        return tuple(
            alpha
            for alpha in range(self.num_minterms)
            if not (self.zeroed_mask >> alpha) & 1
        )

    def to_json_dict(self) -> dict:
        return {"n": self.n, "A": list(self.zeroed), "layout": "lsb-first"}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "OrthogonalSystem":
        if not isinstance(data, Mapping):
            raise ParseError("orthogonal-system JSON must be an object")
        layout = data.get("layout", "lsb-first")
        if layout != "lsb-first":
            raise ParseError(f"unsupported layout {layout!r} (expected 'lsb-first')")
        n = data.get("n")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ParseError("'n' must be a positive integer")
        indices = data.get("A")
        if not isinstance(indices, list):
            raise ParseError("'A' must be a list of minterm indices")
        seen = set()
        for alpha in indices:
            if not isinstance(alpha, int) or isinstance(alpha, bool):
                raise ParseError(f"minterm index {alpha!r} is not an integer")
            if not 0 <= alpha < (1 << n):
                raise ParseError(f"minterm index {alpha} out of range for n={n}")
            if alpha in seen:
                raise ParseError(f"duplicate minterm index {alpha}")
            seen.add(alpha)
        return cls.from_indices(n, indices)

    def render_text(self) -> str:
        """One ``z_(...) = 0`` line per forced-zero minterm."""
        return "\n".join(f"{format_minterm(a, self.n)} = 0" for a in self.zeroed)


@dataclass(frozen=True)
class ZPoint:
    """An assignment of algebra elements to all 2**n minterm variables.

    The structural identities (pairwise disjointness, cover) are not
    enforced at construction so that raw candidate assignments can be
    represented; use :meth:`is_orthogonal` to test them.
    """

    n: int
    cells: tuple[Element, ...]

    def __post_init__(self):
        if len(self.cells) != (1 << self.n):
            raise ValueError(
                f"expected {1 << self.n} cells for n={self.n}, got {len(self.cells)}"
            )
        ranks = {c.rank for c in self.cells}
        if len(ranks) != 1:
            raise ValueError(f"cells of mixed ranks {sorted(ranks)}")

    @property
    def rank(self) -> int:
        return self.cells[0].rank

    @property
    def num_minterms(self) -> int:
        return 1 << self.n

    def __getitem__(self, alpha: MintermIndex) -> Element:
        return self.cells[alpha]

    def is_orthogonal(self) -> bool:
        """True when distinct cells are disjoint and the join of all
        cells is 1, i.e. the cells partition the atom set."""
        union = 0
        total = 0
        for c in self.cells:
            union |= c.mask
            total += c.mask.bit_count()
        return union == (1 << self.rank) - 1 and total == self.rank

    def solves(self, system: OrthogonalSystem) -> bool:
        """True when this point satisfies all three equation groups of
        the orthogonal system."""
        if system.n != self.n:
            raise SystemMismatchError(
                f"point over n={self.n} cannot solve a system with n={system.n}"
            )
        if self.zero_violation_mask(system):
            return False
        return self.is_orthogonal()

    def zero_violation_mask(self, system: OrthogonalSystem) -> int:
        """Bitmask of forced-zero indices whose cell is nonzero."""
        bad = 0
        for alpha in system.zeroed:
            if not self.cells[alpha].is_zero:
                bad |= 1 << alpha
        return bad

    def __str__(self) -> str:
        return " ".join(
            f"{format_minterm(a, self.n)}={self.cells[a]}" for a in range(self.num_minterms)
        )


@dataclass(frozen=True)
class XPoint:
    """An assignment of algebra elements to the system's variables,
    in variable order."""

    names: tuple[str, ...]
    values: tuple[Element, ...]

    def __post_init__(self):
        if len(self.names) != len(self.values):
            raise ValueError("names and values differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        if not self.names:
            raise ValueError("a point needs at least one variable")
        ranks = {v.rank for v in self.values}
        if len(ranks) != 1:
            raise ValueError(f"values of mixed ranks {sorted(ranks)}")

    @classmethod
    def from_mapping(
        cls, assignment: Mapping[str, Element], order: Sequence[str] | None = None
    ) -> "XPoint":
        names = tuple(order) if order is not None else tuple(assignment)
        try:
            values = tuple(assignment[name] for name in names)
        except KeyError as exc:
            raise MissingVariableError(f"no value for variable {exc.args[0]!r}") from None
        return cls(names, values)

    @property
    def rank(self) -> int:
        return self.values[0].rank

    def __getitem__(self, name: str) -> Element:
        try:
            return self.values[self.names.index(name)]
        except ValueError:
            raise KeyError(name) from None

    def items(self):
        return zip(self.names, self.values)

    def as_dict(self) -> dict[str, Element]:
        return dict(self.items())

    def __str__(self) -> str:
        return " ".join(f"{name}={value}" for name, value in self.items())


# --- truth tables and orthogonalization --------------------------------


def _variable_column(i: int, n: int) -> int:
    # Bits alpha (0 <= alpha < 2**n) having bit i set, built by doubling.
    block = 1 << i
    mask = ((1 << block) - 1) << block
    span = block << 1
    while span < (1 << n):
        mask |= mask << span
        span <<= 1
    return mask


def truth_table(t: Term, variables: Sequence[str]) -> int:
    """Evaluate ``t`` over the 2-element algebra at every exponent tuple.

    Returns a 2**n-bit word; bit ``alpha`` is the value of ``t`` when each
    variable x_i takes bit i-1 of ``alpha``.  Every variable of ``t`` must
    appear in ``variables``.
    """
    n = len(variables)
    index = {name: i for i, name in enumerate(variables)}
    if len(index) != n:
        raise ValueError("duplicate variable names")
    full = (1 << (1 << n)) - 1

    def walk(node: Term) -> int:
        if isinstance(node, Var):
            i = index.get(node.name)
            if i is None:
                raise MissingVariableError(
                    f"variable {node.name!r} is not in the variable list"
                )
            return _variable_column(i, n)
        if isinstance(node, Const):
            return full if node.value else 0
        if isinstance(node, Join):
            return walk(node.left) | walk(node.right)
        if isinstance(node, Meet):
            return walk(node.left) & walk(node.right)
        if isinstance(node, Complement):
            return full ^ walk(node.term)
        raise TypeError(f"not a term: {node!r}")

    return walk(t)


def table_bit(table: int, alpha: MintermIndex) -> int:
    """Entry ``alpha`` of a truth table word."""
    return (table >> alpha) & 1


def orthogonalize(system: System, *, max_vars: int | None = None) -> OrthogonalSystem:
    """Reduce ``system`` to its canonical orthogonal form.

    A minterm index is forced to zero exactly when some equation's two
    sides disagree there over the 2-element algebra.  Two systems on the
    same variable list orthogonalize identically iff they have the same
    rank-1 solution set.

    >>> orthogonalize(parse_system("x1 * x2 = x2")).zeroed
    (2,)
    """
    limit = max_vars if max_vars is not None else max_vars_limit()
    n = len(system.variables)
    if n > limit:
        raise LimitExceededError(
            f"system has {n} variables, limit is {limit} "
            f"(override with max_vars or ${MAX_VARS_ENV})"
        )
    disagree = 0
    for eq in system.equations:
        disagree |= truth_table(eq.lhs, system.variables) ^ truth_table(
            eq.rhs, system.variables
        )
    return OrthogonalSystem(n, disagree)


def z_from_x(point: XPoint) -> ZPoint:
    """Minterm coordinates of a variable-space point: cell ``alpha`` is
    the meet over i of x_i (bit set) or its complement (bit clear).

    The result always satisfies disjointness and cover.
    """
    n = len(point.names)
    rank = point.rank
    full = (1 << rank) - 1
    cells = []
    for alpha in range(1 << n):
        mask = full
        for i, value in enumerate(point.values):
            mask &= value.mask if (alpha >> i) & 1 else value.mask ^ full
        cells.append(Element(mask, rank))
    return ZPoint(n, tuple(cells))


def x_from_z(point: ZPoint, variables: Sequence[str] | None = None) -> XPoint:
    """Variable-space coordinates of a minterm-space point: x_i is the
    join of the cells at indices with bit i-1 set.

    ``variables`` names the result's variables (default x1..xn) and must
    have length ``point.n``.
    """
    n = point.n
    if variables is None:
        names = tuple(f"x{i + 1}" for i in range(n))
    else:
        names = tuple(variables)
        if len(names) != n:
            raise ValueError(f"expected {n} variable names, got {len(names)}")
    rank = point.rank
    values = []
    for i in range(n):
        mask = 0
        for alpha in range(1 << n):
            if (alpha >> i) & 1:
                mask |= point.cells[alpha].mask
        values.append(Element(mask, rank))
    return XPoint(names, tuple(values))
