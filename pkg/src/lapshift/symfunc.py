"""Symmetric function bases as symmetric group class functions.

Each of the five classical bases (schur s, elementary e, homogeneous h,
power p, monomial m) corresponds under the Frobenius characteristic to a
class function on the symmetric group.  Those class functions, paired with
the part-multiplicity binomials from the partitions module, are what the
orientation census formulas consume.

Kostka numbers are counted directly as semistandard tableaux; the inverse
Kostka matrix comes from inverting the unitriangular Kostka matrix over the
integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .characters import character
from .errors import InvalidInputError
from .partitions import (
    Partition,
    centralizer_order,
    dominates,
    enumerate_partitions,
    partition_binomial,
)

BASES = ("s", "e", "h", "p", "m")


@dataclass(frozen=True)
class ClassFunction:
    """An integer-valued function on the conjugacy classes of S_n."""

    n: int
    values: tuple[tuple[Partition, int], ...]

    def __post_init__(self):
        classes = {nu for nu, _ in self.values}
        expected = set(enumerate_partitions(self.n))
        if classes != expected:
            raise InvalidInputError(f"class function must cover all cycle types of {self.n}")
        object.__setattr__(self, "_lookup", dict(self.values))

    def __call__(self, nu: Partition) -> int:
        try:
            return self._lookup[nu]
        except KeyError:
            raise InvalidInputError(f"{nu} is not a cycle type for n={self.n}") from None

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.values)


def _class_function(n: int, mapping: dict[Partition, int]) -> ClassFunction:
    return ClassFunction(n, tuple((nu, mapping.get(nu, 0)) for nu in enumerate_partitions(n)))


def kostka(mu: Partition, lam: Partition) -> int:
    """Count semistandard tableaux of shape mu and content lam."""
    if mu.n != lam.n:
        raise InvalidInputError(f"shape and content disagree: {mu.parts} vs {lam.parts}")
    if not mu.parts:
        return 1
    if not dominates(mu, lam):
        return 0
    shape = mu.parts
    remaining = list(lam.parts)
    nvals = len(remaining)
    above: list[list[int]] = [[0] * p for p in shape]

    def fill(r: int, c: int) -> int:
        if r == len(shape):
            return 1
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        lo = above[r][c - 1] if c > 0 else 1
        if r > 0 and c < shape[r - 1]:
            lo = max(lo, above[r - 1][c] + 1)
        total = 0
        for v in range(lo, nvals + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            above[r][c] = v
            total += fill(nr, nc)
            remaining[v - 1] += 1
        return total

    return fill(0, 0)


@cache
def _kostka_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """K[i][j] = kostka(shape_i, content_j) in canonical partition order."""
    ps = enumerate_partitions(n)
    return tuple(tuple(kostka(mu, lam) for lam in ps) for mu in ps)


@cache
def _kostka_inverse(n: int) -> tuple[tuple[int, ...], ...]:
    """Integer inverse of the Kostka matrix.

    In canonical order the matrix is upper triangular with unit diagonal
    (nonzero entries require the row shape to dominate the column content),
    so back substitution stays in the integers.
    """
    k = _kostka_matrix(n)
    size = len(k)
    inv = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    for j in range(size):
        for i in range(j - 1, -1, -1):
            inv[i][j] = -sum(k[i][t] * inv[t][j] for t in range(i + 1, j + 1))
    return tuple(tuple(row) for row in inv)


def inverse_kostka_row(lam: Partition) -> dict[Partition, int]:
    """Coefficients expressing the monomial m_lam over the schur basis."""
    ps = enumerate_partitions(lam.n)
    inv = _kostka_inverse(lam.n)
    i = ps.index(lam)
    return {mu: inv[i][j] for j, mu in enumerate(ps) if inv[i][j] != 0}


@cache
def inverse_frobenius(basis: str, lam: Partition) -> ClassFunction:
    """Class function whose Frobenius characteristic is the named basis element.

    basis "s" gives the irreducible character itself; "p" a scaled class
    indicator; "h" and "e" Kostka-weighted character sums (conjugating the
    shape for "e"); "m" the inverse-Kostka-weighted sum.
    """
    if basis not in BASES:
        raise InvalidInputError(f"unknown basis {basis!r}, expected one of {BASES}")
    n = lam.n
    classes = enumerate_partitions(n)
    if basis == "s":
        vals = {nu: character(lam, nu) for nu in classes}
    elif basis == "p":
        vals = {nu: (centralizer_order(lam) if nu == lam else 0) for nu in classes}
    elif basis == "h":
        vals = {
            nu: sum(kostka(mu, lam) * character(mu, nu) for mu in classes) for nu in classes
        }
    elif basis == "e":
        vals = {
            nu: sum(kostka(mu.conjugate(), lam) * character(mu, nu) for mu in classes)
            for nu in classes
        }
    else:
        row = inverse_kostka_row(lam)
        vals = {
            nu: sum(coeff * character(mu, nu) for mu, coeff in row.items()) for nu in classes
        }
    return _class_function(n, vals)


@cache
def character_binomial(lam: Partition, mu: Partition) -> int:
    """Binomial-weighted character sum pairing a shape with an orientation type.

    Sums chi_lam(nu) * partition_binomial(mu, nu) over all cycle types nu.
    The result is always nonnegative; that fact underpins every census
    comparison downstream, so it is asserted here.
    """
    if lam.n != mu.n:
        raise InvalidInputError(f"partitions of different integers: {lam.parts} vs {mu.parts}")
    total = 0
    for nu in enumerate_partitions(lam.n):
        b = partition_binomial(mu, nu)
        if b:
            total += character(lam, nu) * b
    assert total >= 0, f"negative character binomial for {lam.parts}, {mu.parts}"
    return total


@cache
def basis_binomial(basis: str, lam: Partition, mu: Partition) -> int:
    """character_binomial with the character replaced by any basis class function."""
    if lam.n != mu.n:
        raise InvalidInputError(f"partitions of different integers: {lam.parts} vs {mu.parts}")
    f = inverse_frobenius(basis, lam)
    total = 0
    for nu in enumerate_partitions(lam.n):
        b = partition_binomial(mu, nu)
        if b:
            total += f(nu) * b
    return total
