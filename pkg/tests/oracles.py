"""Independent oracles shared by the tests.

Nothing here reuses the library's fast paths: the swap closure explores raw
words by breadth-first search, and the moment functional applies a moment
list to an explicitly expanded product.  Both exist so the corresponding
library operations can be checked against something that cannot share their
bugs.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from heaporth.basis import CoeffSpec
from heaporth.heaps import Piece
from heaporth.poly import MultiPoly, UniPoly


def swap_closure(word: Sequence[Piece]) -> set[tuple[Piece, ...]]:
    """All words reachable by adjacent swaps of disjoint-support pieces."""
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for i in range(len(cur) - 1):
            a, b = cur[i], cur[i + 1]
            if not a.overlaps(b):
                nxt = cur[:i] + (b, a) + cur[i + 2 :]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return seen


def apply_moment_functional(
    product: UniPoly, moments: Sequence[MultiPoly]
) -> MultiPoly:
    """Linear functional x^k -> moments[k] applied to an expanded polynomial."""
    out = MultiPoly.zero()
    for k, coeff in enumerate(product.coeffs):
        out = out + coeff * moments[k]
    return out


def dyck_spec() -> CoeffSpec:
    """All c_i = 0 with the lambda_i kept symbolic (up to index 9)."""
    return CoeffSpec.custom(
        [MultiPoly.zero()] * 10, [MultiPoly.lam(i) for i in range(1, 10)]
    )


def catalan_number(m: int) -> int:
    import math

    return math.comb(2 * m, m) // (m + 1)
