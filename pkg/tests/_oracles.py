"""Brute-force oracles, independent of the package implementation.

Everything here enumerates explicit monomials in explicit basis vectors,
so it is exponentially slower than the closed-form package code but
trivially correct.  The test modules compare the two.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

Bidegree = tuple[int, int]


def _signed_basis(entries: dict[Bidegree, tuple[int, int]]
                  ) -> list[tuple[Bidegree, int]]:
    basis: list[tuple[Bidegree, int]] = []
    for degree in sorted(entries):
        plus, minus = entries[degree]
        basis.extend([(degree, 1)] * plus)
        basis.extend([(degree, -1)] * minus)
    return basis


def _collect(monomials):
    """Tally each selection of basis vectors by degree and sign."""
    table: dict[Bidegree, list[int]] = {}
    for combo in monomials:
        p = sum(degree[0] for degree, _ in combo)
        q = sum(degree[1] for degree, _ in combo)
        sign = 1
        for _, s in combo:
            sign *= s
        pair = table.setdefault((p, q), [0, 0])
        pair[0 if sign > 0 else 1] += 1
    return {key: (plus, minus) for key, (plus, minus) in sorted(table.items())}


def eq_sym_power_oracle(entries: dict[Bidegree, tuple[int, int]],
                        k: int) -> dict[Bidegree, tuple[int, int]]:
    """Multisets of k basis vectors, graded by degree and total sign."""
    basis = _signed_basis(entries)
    return _collect(combinations_with_replacement(basis, k))


def eq_ext_power_oracle(entries: dict[Bidegree, tuple[int, int]],
                        k: int) -> dict[Bidegree, tuple[int, int]]:
    """Position-strictly-increasing selections of k basis vectors."""
    basis = _signed_basis(entries)
    return _collect(combinations(basis, k))


def sym_power_oracle(entries: dict[Bidegree, int],
                     k: int) -> dict[Bidegree, int]:
    signed = eq_sym_power_oracle({d: (m, 0) for d, m in entries.items()}, k)
    return {d: plus for d, (plus, _) in signed.items() if plus}


def ext_power_oracle(entries: dict[Bidegree, int],
                     k: int) -> dict[Bidegree, int]:
    signed = eq_ext_power_oracle({d: (m, 0) for d, m in entries.items()}, k)
    return {d: plus for d, (plus, _) in signed.items() if plus}


def naive_truncated_product(a: dict[tuple[int, int, int], int],
                            b: dict[tuple[int, int, int], int],
                            max_xy: int,
                            max_t: int) -> dict[tuple[int, int, int], int]:
    """Full polynomial product first, truncation afterwards."""
    full: dict[tuple[int, int, int], int] = {}
    for (x1, y1, t1), c1 in a.items():
        for (x2, y2, t2), c2 in b.items():
            key = (x1 + x2, y1 + y2, t1 + t2)
            full[key] = full.get(key, 0) + c1 * c2
    return {key: c for key, c in sorted(full.items())
            if c and key[0] <= max_xy and key[1] <= max_xy and key[2] <= max_t}


def swap_orbit_counts(max_k: int = 2) -> tuple[int, ...]:
    """Orbit counts of the swap on monomials h1^a h2^b with a + b = k.

    Models the degree 2k cohomology of a smooth (1,1) divisor in
    P^3 x P^3 for 2k < 5, where restriction from the ambient space is an
    isomorphism and the swap exchanges the two hyperplane classes.
    """
    counts = []
    for k in range(max_k + 1):
        monomials = {(a, k - a) for a in range(k + 1)
                     if a <= 3 and k - a <= 3}
        orbits = {tuple(sorted(m)) for m in monomials}
        counts.append(len(orbits))
    return tuple(counts)
