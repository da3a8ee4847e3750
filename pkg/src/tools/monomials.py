"""Exact monomial arithmetic over a fixed variable universe."""

import re
from typing import Iterable, List, Tuple

import numpy as np

from ..models.errors import UniverseMismatchError
from ..models.schemas import Monomial, MonomialSet

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")

# rows compared per block when building divisibility tables
_CHUNK = 256


def _check_universe(u: Monomial, v: Monomial) -> None:
    if u.n != v.n:
        raise UniverseMismatchError(
            f"monomials live in different universes ({u.n} vs {v.n} variables)"
        )


def divides(u: Monomial, v: Monomial) -> bool:
    """True iff u divides v."""
    _check_universe(u, v)
    return all(a <= b for a, b in zip(u.exps, v.exps))


def strictly_divides(u: Monomial, v: Monomial) -> bool:
    return u != v and divides(u, v)


def colon(u: Monomial, v: Monomial) -> Monomial:
    """u : v = u / gcd(u, v)."""
    _check_universe(u, v)
    return Monomial(exps=tuple(max(a - b, 0) for a, b in zip(u.exps, v.exps)))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    _check_universe(u, v)
    return Monomial(exps=tuple(min(a, b) for a, b in zip(u.exps, v.exps)))


def multiply(u: Monomial, v: Monomial) -> Monomial:
    _check_universe(u, v)
    return Monomial(exps=tuple(a + b for a, b in zip(u.exps, v.exps)))


def power(u: Monomial, k: int) -> Monomial:
    if k < 0:
        raise ValueError(f"negative power {k}")
    return Monomial(exps=tuple(a * k for a in u.exps))


def product(monomials: Iterable[Monomial], n: int) -> Monomial:
    total = [0] * n
    for m in monomials:
        if m.n != n:
            raise UniverseMismatchError(f"{m} does not live in {n} variables")
        for i, e in enumerate(m.exps):
            total[i] += e
    return Monomial(exps=tuple(total))


def exponent_matrix(monomials: Iterable[Monomial], n: int) -> np.ndarray:
    rows = [m.exps for m in monomials]
    if not rows:
        return np.zeros((0, n), dtype=np.int64)
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


def non_minimal_mask(matrix: np.ndarray) -> np.ndarray:
    """Rows strictly divisible by some other row of ``matrix``.

    Rows are assumed pairwise distinct.
    """
    k = matrix.shape[0]
    mask = np.zeros(k, dtype=bool)
    for start in range(0, k, _CHUNK):
        block = matrix[start:start + _CHUNK]
        # divisible[i, j]: row i divides block row j
        divisible = (matrix[:, None, :] <= block[None, :, :]).all(axis=2)
        for offset in range(block.shape[0]):
            divisible[start + offset, offset] = False
        mask[start:start + block.shape[0]] = divisible.any(axis=0)
    return mask


def minimalize(monomials: Iterable[Monomial]) -> MonomialSet:
    """Elements not strictly divisible by another element of the set."""
    elems = list(set(monomials))
    if not elems:
        return frozenset()
    n = elems[0].n
    for m in elems:
        if m.n != n:
            raise UniverseMismatchError("monomial set mixes variable universes")
    mask = non_minimal_mask(exponent_matrix(elems, n))
    return frozenset(m for m, dropped in zip(elems, mask) if not dropped)


def variable_generated(colons: np.ndarray) -> Tuple[bool, List[int]]:
    """Decide whether the monomials in the rows of ``colons`` generate an
    ideal generated by variables.

    Returns the verdict and the 1-based labels of the variables among the
    minimal generators. An empty matrix is the zero ideal and passes.
    """
    if colons.shape[0] == 0:
        return True, []
    degrees = colons.sum(axis=1)
    linear = colons[degrees == 1]
    variables = np.flatnonzero(linear.any(axis=0)) if linear.size else np.zeros(0, dtype=np.int64)
    labels = [int(i) + 1 for i in variables]
    if (degrees == 0).any() or not labels:
        return False, labels
    covered = (colons[:, variables] > 0).any(axis=1)
    return bool(covered.all()), labels


def is_variable_generated(monomials: Iterable[Monomial]) -> bool:
    return all(m.degree == 1 for m in minimalize(monomials))


def is_equigenerated(monomials: Iterable[Monomial]) -> bool:
    return len({m.degree for m in minimalize(monomials)}) <= 1


def canonical_key(m: Monomial):
    return (m.degree, tuple(-e for e in m.exps))


def canonical_sort(monomials: Iterable[Monomial]) -> List[Monomial]:
    """Degree first, then exponent vector lexicographically descending."""
    return sorted(monomials, key=canonical_key)


def format_monomial(m: Monomial) -> str:
    return str(m)


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``1`` or ``x1*x3^2`` style text into a monomial in n variables."""
    text = text.strip()
    if text == "1":
        return Monomial.one(n)
    exps = [0] * n
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise ValueError(f"malformed monomial factor {factor!r} in {text!r}")
        index = int(match.group(1))
        exponent = int(match.group(2) or 1)
        if not 1 <= index <= n:
            raise ValueError(f"variable x{index} outside universe of {n} variables")
        exps[index - 1] += exponent
    return Monomial(exps=tuple(exps))
