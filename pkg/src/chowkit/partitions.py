"""Partitions in a box and products of Schubert classes.

Schubert classes on Gr(k, n) are indexed by partitions fitting a k x (n-k)
box.  Products are computed by expanding one factor with the Giambelli
(Jacobi-Trudi) determinant into special classes and applying the Pieri rule
one special class at a time.  Box truncation then happens automatically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros stripped).

    Instances hash and compare equal to the plain tuple of their parts, so
    ``Partition((2, 1))`` and ``(2, 1)`` are interchangeable as dict keys.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


@dataclass(frozen=True)
class BoxShape:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"box sides must be positive, got {self.rows}x{self.cols}")

    @property
    def area(self) -> int:
        return self.rows * self.cols

    @property
    def full(self) -> tuple:
        return (self.cols,) * self.rows


def weight(lam) -> int:
    return sum(lam)


def sort_key(lam):
    """Canonical order: by weight, then lexicographically descending."""
    return (sum(lam), tuple(-p for p in lam))


def fits_in_box(lam, box: BoxShape) -> bool:
    return len(lam) <= box.rows and (not lam or lam[0] <= box.cols)


def complement_in_box(lam, box: BoxShape) -> Partition:
    if not fits_in_box(lam, box):
        raise ValueError(f"{tuple(lam)} does not fit a {box.rows}x{box.cols} box")
    padded = tuple(lam) + (0,) * (box.rows - len(lam))
    return Partition(box.cols - p for p in reversed(padded))


def partitions_in_box(box: BoxShape, weight: int | None = None) -> list[tuple]:
    """All partitions fitting ``box`` (of the given weight, if any), canonically ordered."""
    out = []

    def rec(prefix, max_part, rows_left, remaining):
        if weight is not None and remaining == 0:
            out.append(tuple(prefix))
            return
        if weight is None:
            out.append(tuple(prefix))
        if rows_left == 0:
            return
        top = max_part if weight is None else min(max_part, remaining)
        for p in range(top, 0, -1):
            prefix.append(p)
            rec(prefix, p, rows_left - 1, None if weight is None else remaining - p)
            prefix.pop()

    if weight is not None and (weight < 0 or weight > box.area):
        return []
    rec([], box.cols, box.rows, weight)
    out.sort(key=sort_key)
    return out


def _horizontal_strips(lam: tuple, m: int, rows: int, cols: int) -> Iterator[tuple]:
    # mu_1 <= cols, lam_i <= mu_i <= lam_{i-1}, at most rows parts
    nrows = min(len(lam) + 1, rows)
    lam_pad = lam + (0,) * (nrows - len(lam))
    mu = [0] * nrows

    def rec(i, left):
        if i == nrows:
            if left == 0:
                yield tuple(p for p in mu if p)
            return
        upper = cols if i == 0 else lam_pad[i - 1]
        lo = lam_pad[i]
        for v in range(min(upper, lo + left), lo - 1, -1):
            mu[i] = v
            yield from rec(i + 1, left - (v - lo))

    yield from rec(0, m)


@lru_cache(maxsize=None)
def _pieri(lam: tuple, m: int, rows: int, cols: int) -> tuple:
    return tuple(sorted(_horizontal_strips(lam, m, rows, cols), key=sort_key))


def pieri_multiply(lam, m: int, box: BoxShape) -> list[Partition]:
    """Partitions mu with mu/lam a horizontal m-strip, cut down to ``box``."""
    if not fits_in_box(lam, box):
        raise ValueError(f"{tuple(lam)} does not fit a {box.rows}x{box.cols} box")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return [Partition(mu) for mu in _pieri(tuple(lam), m, box.rows, box.cols)]


@lru_cache(maxsize=None)
def _giambelli(lam: tuple) -> tuple:
    k = len(lam)
    acc: dict[tuple, int] = {}
    for perm in permutations(range(k)):
        # sign of the permutation by counting inversions
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        idx = []
        for i in range(k):
            a = lam[i] + perm[i] - i
            if a < 0:
                break
            if a:
                idx.append(a)
        else:
            key = tuple(sorted(idx, reverse=True))
            acc[key] = acc.get(key, 0) + (-1) ** inv
    return tuple(sorted(((key, c) for key, c in acc.items() if c), key=lambda kc: sort_key(kc[0])))


def giambelli_expand(lam) -> dict[tuple, int]:
    """Jacobi-Trudi determinant det(sigma_{lam_i + j - i}) as a signed polynomial.

    Keys are weakly decreasing tuples of single-row indices (a monomial
    sigma_{a_1} sigma_{a_2} ...); sigma_0 = 1 is dropped.

    >>> giambelli_expand((2, 1))
    {(3,): -1, (2, 1): 1}
    """
    return dict(_giambelli(tuple(Partition(lam))))


def _apply_specials(start: dict, specials: tuple, rows: int, cols: int) -> dict:
    current = start
    for m in specials:
        nxt: dict = {}
        for lam, c in current.items():
            for mu in _pieri(lam, m, rows, cols):
                nxt[mu] = nxt.get(mu, 0) + c
        current = nxt
        if not current:
            break
    return current


@lru_cache(maxsize=None)
def _schubert_product(lam: tuple, mu: tuple, rows: int, cols: int) -> tuple:
    if sum(lam) + sum(mu) > rows * cols:
        return ()
    acc: dict = {}
    for specials, sign in _giambelli(mu):
        for nu, c in _apply_specials({lam: 1}, specials, rows, cols).items():
            acc[nu] = acc.get(nu, 0) + sign * c
    return tuple(sorted(((nu, c) for nu, c in acc.items() if c), key=lambda kc: sort_key(kc[0])))


def schubert_product(lam, mu, box: BoxShape) -> dict[tuple, int]:
    """Structure constants of sigma_lam * sigma_mu in the box's Grassmannian."""
    lam, mu = tuple(Partition(lam)), tuple(Partition(mu))
    for p in (lam, mu):
        if not fits_in_box(p, box):
            raise ValueError(f"{p} does not fit a {box.rows}x{box.cols} box")
    # expand the factor with fewer rows: its determinant is smaller
    if (len(mu), sum(mu)) > (len(lam), sum(lam)):
        lam, mu = mu, lam
    return dict(_schubert_product(lam, mu, box.rows, box.cols))
