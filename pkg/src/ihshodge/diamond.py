"""Exact arithmetic on bigraded Hodge-number tables.

A Hodge diamond records the dimensions h^{p,q} of the bigraded pieces of
the cohomology of a compact complex manifold, or of any abstract bigraded
vector space.  Everything here is exact integer arithmetic: tables are
immutable, operations are pure functions, and no floating point appears
anywhere.

Besides the basic table algebra (direct sum, tensor product, Tate twist,
symmetric and exterior powers) the module carries the two numerical
constraints on compact hyperkaehler manifolds that the rest of the
package leans on:

* :func:`salamon_residual` evaluates Salamon's linear relation among the
  Betti numbers of a hyperkaehler 2n-fold,
* :func:`solve_betti_dim6` inverts that relation, together with the
  topological Euler characteristic, for the two unknown Betti numbers of
  a 6-fold with vanishing odd cohomology.

Algebraic operations return dimensionless ("abstract") tables, because a
symmetric power or a twist of manifold cohomology is no longer the full
cohomology of a manifold.  Use :meth:`HodgeDiamond.with_dimension` to
stamp a complex dimension back on an assembled table.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

__all__ = [
    "Bidegree",
    "BettiVector",
    "CheckReport",
    "ConsistencyError",
    "HodgeDiamond",
    "betti",
    "check_diamond",
    "chi_p",
    "complete_by_duality",
    "direct_sum",
    "euler_characteristic",
    "ext_power",
    "make_diamond",
    "salamon_residual",
    "solve_betti_dim6",
    "sym_power",
    "tate_twist",
    "tensor",
    "weight_sums",
]

Bidegree = tuple[int, int]


class ConsistencyError(RuntimeError):
    """An internal cross-check of a computation failed.

    Distinct from ``ValueError`` (bad caller input): this exception means
    two independent routes to the same quantity disagreed, so a constant
    or an algorithm is corrupt and no output should be trusted.
    """


def _validated_entries(entries: Mapping[Bidegree, int],
                       dim: int | None) -> dict[Bidegree, int]:
    table: dict[Bidegree, int] = {}
    for key, value in entries.items():
        if (not isinstance(key, tuple) or len(key) != 2
                or not all(isinstance(c, int) for c in key)):
            raise ValueError(f"bidegree keys must be integer pairs, got {key!r}")
        p, q = key
        if p < 0 or q < 0:
            raise ValueError(f"negative bidegree ({p},{q})")
        if not isinstance(value, int):
            raise ValueError(f"dimension at ({p},{q}) must be an integer, got {value!r}")
        if value < 0:
            raise ValueError(f"negative dimension {value} at ({p},{q})")
        if dim is not None and (p > dim or q > dim):
            raise ValueError(
                f"entry at ({p},{q}) lies outside the diamond of a {dim}-fold")
        if value:
            table[(p, q)] = value
    return dict(sorted(table.items()))


class HodgeDiamond:
    """Immutable table (p, q) -> h^{p,q}, with an optional complex dimension.

    Zero entries are dropped on construction, so two diamonds compare
    equal exactly when they store the same nonzero dimensions and the
    same ``complex_dimension``.  Hodge symmetry and Poincare duality are
    deliberately not enforced: intermediate tables of a quotient
    computation violate both.  Run :func:`check_diamond` to test them.

    >>> K3 = HodgeDiamond({(0, 0): 1, (2, 0): 1, (1, 1): 20, (0, 2): 1,
    ...                    (2, 2): 1}, complex_dimension=2)
    >>> K3.h(1, 1)
    20
    >>> K3.h(1, 0)
    0
    >>> K3.total_dimension()
    24
    """

    __slots__ = ("_entries", "_dim")

    def __init__(self, entries: Mapping[Bidegree, int] = (),
                 complex_dimension: int | None = None):
        if complex_dimension is not None:
            if not isinstance(complex_dimension, int) or complex_dimension < 0:
                raise ValueError(
                    f"complex dimension must be a nonnegative integer, "
                    f"got {complex_dimension!r}")
        if not isinstance(entries, Mapping):
            entries = dict(entries)
        object.__setattr__(self, "_dim", complex_dimension)
        object.__setattr__(self, "_entries",
                           _validated_entries(entries, complex_dimension))

    def __setattr__(self, name, value):
        raise AttributeError("HodgeDiamond is immutable")

    @property
    def complex_dimension(self) -> int | None:
        return self._dim

    @property
    def entries(self) -> dict[Bidegree, int]:
        """A fresh copy of the nonzero entries."""
        return dict(self._entries)

    def h(self, p: int, q: int) -> int:
        return self._entries.get((p, q), 0)

    def items(self) -> Iterator[tuple[int, int, int]]:
        """Yield (p, q, h^{p,q}) triples in lexicographic order."""
        for (p, q), value in self._entries.items():
            yield p, q, value

    def total_dimension(self) -> int:
        return sum(self._entries.values())

    def with_dimension(self, n: int) -> "HodgeDiamond":
        """Return the same table stamped as the diamond of an n-fold."""
        return HodgeDiamond(self._entries, complex_dimension=n)

    def as_abstract(self) -> "HodgeDiamond":
        """Return the same table with the complex dimension dropped."""
        if self._dim is None:
            return self
        return HodgeDiamond(self._entries, complex_dimension=None)

    # -- value semantics ------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, HodgeDiamond):
            return NotImplemented
        return self._dim == other._dim and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._dim, tuple(self._entries.items())))

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __repr__(self) -> str:
        body = ", ".join(f"({p},{q}): {v}" for p, q, v in self.items())
        if self._dim is None:
            return f"HodgeDiamond({{{body}}})"
        return f"HodgeDiamond({{{body}}}, complex_dimension={self._dim})"

    # -- operator sugar -------------------------------------------------

    def __add__(self, other: "HodgeDiamond") -> "HodgeDiamond":
        return direct_sum(self, other)

    def __mul__(self, other: "HodgeDiamond") -> "HodgeDiamond":
        return tensor(self, other)

    # -- serialization --------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "complex_dimension": self._dim,
            "entries": [[p, q, v] for p, q, v in self.items()],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=indent)

    @classmethod
    def from_json_dict(cls, data: dict) -> "HodgeDiamond":
        if not isinstance(data, Mapping):
            raise ValueError("diamond JSON must be an object")
        for key in ("complex_dimension", "entries"):
            if key not in data:
                raise ValueError(f"diamond JSON lacks the {key!r} key")
        raw = data["entries"]
        if not isinstance(raw, list):
            raise ValueError("diamond JSON entries must be a list")
        table: dict[Bidegree, int] = {}
        for item in raw:
            if not isinstance(item, list) or len(item) != 3:
                raise ValueError(f"malformed diamond entry {item!r}")
            p, q, v = item
            if (p, q) in table:
                raise ValueError(f"duplicate diamond entry at ({p},{q})")
            table[(p, q)] = v
        return cls(table, complex_dimension=data["complex_dimension"])

    @classmethod
    def from_json(cls, text: str) -> "HodgeDiamond":
        return cls.from_json_dict(json.loads(text))


def make_diamond(dim_opt: int | None,
                 entries: Sequence[tuple[int, int, int]]) -> HodgeDiamond:
    """Build a diamond from (p, q, value) triples, rejecting duplicates."""
    table: dict[Bidegree, int] = {}
    for p, q, value in entries:
        if (p, q) in table:
            raise ValueError(f"duplicate entry at ({p},{q})")
        table[(p, q)] = value
    return HodgeDiamond(table, complex_dimension=dim_opt)


# ---------------------------------------------------------------------------
# numerical invariants


@dataclass(frozen=True)
class BettiVector:
    """A row b_0 .. b_{2n} of Betti numbers.

    :func:`betti` produces manifold vectors, where ``n`` is the complex
    dimension and the row spans all cohomological degrees 0 .. 2n.
    :func:`salamon_residual` instead consumes constraint vectors, where
    ``n`` is half the complex dimension of the hyperkaehler manifold and
    the row stops at the middle degree 2n.  :meth:`lower_half` converts
    the former into the latter.
    """

    n: int
    b: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.b) != 2 * self.n + 1:
            raise ValueError(
                f"expected {2 * self.n + 1} Betti numbers for n={self.n}, "
                f"got {len(self.b)}")
        for k, value in enumerate(self.b):
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"b_{k} must be a nonnegative integer")

    def __len__(self) -> int:
        return len(self.b)

    def __getitem__(self, k: int) -> int:
        return self.b[k]

    def lower_half(self) -> "BettiVector":
        """Truncate a manifold vector at its middle degree.

        Requires an even ``n``; the result has half the ``n`` and is the
        shape :func:`salamon_residual` expects.
        """
        if self.n % 2:
            raise ValueError("lower_half needs an even complex dimension")
        return BettiVector(self.n // 2, self.b[: self.n + 1])


def betti(d: HodgeDiamond) -> BettiVector:
    """Betti numbers b_k = sum over p+q=k of h^{p,q}.

    >>> point = HodgeDiamond({(0, 0): 1}, complex_dimension=0)
    >>> betti(point).b
    (1,)
    """
    n = d.complex_dimension
    if n is None:
        raise ValueError("betti needs a diamond with a complex dimension")
    row = [0] * (2 * n + 1)
    for p, q, value in d.items():
        row[p + q] += value
    return BettiVector(n, tuple(row))


def chi_p(d: HodgeDiamond, p: int) -> int:
    """Hirzebruch characteristic chi^p = sum over q of (-1)^q h^{p,q}."""
    n = d.complex_dimension
    if n is None:
        raise ValueError("chi_p needs a diamond with a complex dimension")
    if not 0 <= p <= n:
        raise ValueError(f"p={p} out of range for a {n}-fold")
    return sum((-1) ** q * d.h(p, q) for q in range(n + 1))


def euler_characteristic(d: HodgeDiamond) -> int:
    """Topological Euler characteristic sum (-1)^{p+q} h^{p,q}."""
    return sum((-1) ** (p + q) * value for p, q, value in d.items())


def weight_sums(d: HodgeDiamond) -> dict[int, int]:
    """Total dimension in each weight p+q, for any table."""
    out: dict[int, int] = {}
    for p, q, value in d.items():
        out[p + q] = out.get(p + q, 0) + value
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# table algebra (all results are abstract, i.e. dimensionless)


def direct_sum(a: HodgeDiamond, b: HodgeDiamond) -> HodgeDiamond:
    """Entrywise sum of two tables."""
    table = a.entries
    for p, q, value in b.items():
        table[(p, q)] = table.get((p, q), 0) + value
    return HodgeDiamond(table)


def tensor(a: HodgeDiamond, b: HodgeDiamond) -> HodgeDiamond:
    """Bigraded tensor product (convolution of the two tables).

    >>> line = HodgeDiamond({(1, 1): 1})
    >>> t = tensor(line, HodgeDiamond({(0, 2): 3, (1, 0): 2}))
    >>> sorted(t.entries.items())
    [((1, 3), 3), ((2, 1), 2)]
    """
    table: dict[Bidegree, int] = {}
    for p1, q1, v1 in a.items():
        for p2, q2, v2 in b.items():
            key = (p1 + p2, q1 + q2)
            table[key] = table.get(key, 0) + v1 * v2
    return HodgeDiamond(table)


def tate_twist(d: HodgeDiamond, k: int) -> HodgeDiamond:
    """Shift every entry from (p, q) to (p+k, q+k).

    ``k`` may be negative as long as all shifted indices stay >= 0.
    """
    table: dict[Bidegree, int] = {}
    for p, q, value in d.items():
        if p + k < 0 or q + k < 0:
            raise ValueError(f"twist by {k} pushes ({p},{q}) out of range")
        table[(p + k, q + k)] = value
    return HodgeDiamond(table)


def _require_even_support(d: HodgeDiamond, op: str) -> None:
    for p, q, _ in d.items():
        if (p + q) % 2:
            raise ValueError(
                f"{op} needs even total degrees only; found an entry at "
                f"({p},{q})")


def _sym_dim(m: int, j: int) -> int:
    if j == 0:
        return 1
    if m == 0:
        return 0
    return math.comb(m + j - 1, j)


def _ext_dim(m: int, j: int) -> int:
    return math.comb(m, j)


def _graded_power(entries: dict[Bidegree, int], k: int, block) -> dict[Bidegree, int]:
    """Distribute a power k over the graded pieces of a table.

    ``block(m, j)`` is the dimension of the j-th power functor applied to
    a single m-dimensional piece; the cross terms between pieces are
    plain tensor products.
    """
    acc: list[dict[Bidegree, int]] = [{} for _ in range(k + 1)]
    acc[0][(0, 0)] = 1
    for (p, q), m in sorted(entries.items()):
        nxt = [dict(t) for t in acc]
        for j in range(1, k + 1):
            bd = block(m, j)
            if not bd:
                continue
            for used in range(k - j + 1):
                for (ap, aq), av in acc[used].items():
                    key = (ap + j * p, aq + j * q)
                    tgt = nxt[used + j]
                    tgt[key] = tgt.get(key, 0) + av * bd
        acc = nxt
    return acc[k]


def sym_power(d: HodgeDiamond, k: int) -> HodgeDiamond:
    """k-th symmetric power of a table supported in even total degree.

    Odd total degrees would need Koszul signs, which this table algebra
    does not model, so they are rejected.

    >>> H2 = HodgeDiamond({(2, 0): 1, (1, 1): 20, (0, 2): 1})
    >>> sym_power(H2, 2).h(2, 2)
    211
    """
    if k < 0:
        raise ValueError("power index must be nonnegative")
    _require_even_support(d, "sym_power")
    return HodgeDiamond(_graded_power(d.entries, k, _sym_dim))


def ext_power(d: HodgeDiamond, k: int) -> HodgeDiamond:
    """k-th exterior power of a table supported in even total degree."""
    if k < 0:
        raise ValueError("power index must be nonnegative")
    _require_even_support(d, "ext_power")
    return HodgeDiamond(_graded_power(d.entries, k, _ext_dim))


# ---------------------------------------------------------------------------
# hyperkaehler constraints


def salamon_residual(b: BettiVector) -> int:
    """Salamon's constraint on a hyperkaehler 2n-fold, as a residual.

    The input is a constraint vector b_0 .. b_{2n} where ``b.n`` is half
    the complex dimension (see :class:`BettiVector`).  Returns

        2 * sum_{j=1}^{2n} (-1)^j (3j^2 - n) b_{2n-j}  -  n * b_{2n}

    which vanishes exactly when the constraint holds.  The sum starts at
    j = 1: the j = 0 term would change the relation on every known
    example, so the top Betti number enters only through the right hand
    side.

    >>> salamon_residual(BettiVector(2, (1, 0, 23, 0, 276)))
    0
    """
    n = b.n
    total = sum((-1) ** j * (3 * j * j - n) * b.b[2 * n - j]
                for j in range(1, 2 * n + 1))
    return 2 * total - n * b.b[2 * n]


def solve_betti_dim6(b0: int, b2: int, chi_top: int) -> tuple[int, int]:
    """Solve for (b4, b6) of a 6-fold with vanishing odd Betti numbers.

    Combines the n = 3 Salamon relation 3 b6 = 18 b4 + 90 b2 + 210 b0
    with chi_top = 2 (b0 + b2 + b4) + b6.  Raises ``ValueError`` when no
    nonnegative integer solution exists.

    >>> solve_betti_dim6(1, 8, 1920)
    (199, 1504)
    """
    b4, remainder = divmod(chi_top - 32 * b2 - 72 * b0, 8)
    if remainder:
        raise ValueError(
            f"no integral b4 for b0={b0}, b2={b2}, chi={chi_top}")
    b6 = chi_top - 2 * (b0 + b2 + b4)
    if b4 < 0 or b6 < 0:
        raise ValueError(
            f"no nonnegative solution for b0={b0}, b2={b2}, chi={chi_top}")
    return b4, b6


# ---------------------------------------------------------------------------
# structural checks


@dataclass(frozen=True)
class CheckReport:
    """Violations found by :func:`check_diamond`; empty means pass."""

    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_diamond(d: HodgeDiamond) -> CheckReport:
    """Report violations of Hodge symmetry, Poincare duality and positivity."""
    n = d.complex_dimension
    if n is None:
        raise ValueError("check_diamond needs a diamond with a complex dimension")
    found: list[str] = []
    for p, q, value in d.items():
        if value < 0:
            found.append(f"negative entry {value} at ({p},{q})")
    for p in range(n + 1):
        for q in range(p + 1, n + 1):
            if d.h(p, q) != d.h(q, p):
                found.append(
                    f"hodge symmetry broken: h[{p},{q}]={d.h(p, q)} "
                    f"!= h[{q},{p}]={d.h(q, p)}")
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q < n or (p + q == n and (p, q) <= (n - p, n - q)):
                dual = d.h(n - p, n - q)
                if d.h(p, q) != dual:
                    found.append(
                        f"poincare duality broken: h[{p},{q}]={d.h(p, q)} "
                        f"!= h[{n - p},{n - q}]={dual}")
    return CheckReport(tuple(found))


def complete_by_duality(d: HodgeDiamond, n: int) -> HodgeDiamond:
    """Extend a table supported in p+q <= n to a full n-fold diamond.

    Entries with p+q < n are mirrored to (n-p, n-q).  An entry already
    present above the middle must agree with its mirror, otherwise a
    :class:`ConsistencyError` is raised.
    """
    table: dict[Bidegree, int] = {}
    upper: dict[Bidegree, int] = {}
    for p, q, value in d.items():
        if p + q <= n:
            table[(p, q)] = value
        else:
            upper[(p, q)] = value
    for (p, q), value in list(table.items()):
        if p + q < n:
            table[(n - p, n - q)] = value
    for (p, q), value in upper.items():
        if table.get((p, q), 0) != value:
            raise ConsistencyError(
                f"duality completion conflict at ({p},{q}): table holds "
                f"{value}, mirror of ({n - p},{n - q}) gives "
                f"{table.get((p, q), 0)}")
    return HodgeDiamond(table, complex_dimension=n)
