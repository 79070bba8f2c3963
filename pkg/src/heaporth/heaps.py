"""Heaps of monomers and dimers on a row of needles.

A monomer m_i occupies the single column i; a dimer d_i spans the two
columns i-1 and i.  A word over these pieces builds a configuration by
threading the pieces one at a time and letting each settle as far down as
it can: a piece lands one level above the highest earlier piece whose
columns it shares, or on the ground.  Two words are equivalent when they
settle to the same configuration, which happens exactly when one can be
turned into the other by repeatedly swapping adjacent pieces with disjoint
columns; the settled configuration is the canonical representative.

The canonical word of a heap lists its pieces level by level from the
ground up, left to right within a level.  A heap whose order has a unique
maximal piece is a pyramid, and that piece is its summit: pushing it down
flattens the whole heap.

Closed Motzkin paths embed into heaps: read the path word right to left,
drop the descents, and turn each ascent a_i into the dimer d_{i+1} and each
level step c_i into the monomer m_i.  The image is always a pyramid with
summit m_0 or d_1, and the map is inverted here by backtracking over the
orders in which the heap can be unstacked.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .paths import MotzkinPath, PathWord, Step, path_word


class NotInImageError(ValueError):
    """The heap is not the image of any closed Motzkin path."""


class BijectionViolationError(AssertionError):
    """Path reconstruction found no or several candidates; should not happen."""


@dataclass(frozen=True)
class Piece:
    """A monomer m_i (column i) or dimer d_i (columns i-1 and i)."""

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in ("m", "d"):
            raise ValueError(f"unknown piece kind {self.kind!r}")
        if self.kind == "m" and self.index < 0:
            raise ValueError("monomer index must be >= 0")
        if self.kind == "d" and self.index < 1:
            raise ValueError("dimer index must be >= 1")

    @cached_property
    def support(self) -> tuple[int, ...]:
        if self.kind == "m":
            return (self.index,)
        return (self.index - 1, self.index)

    @property
    def min_col(self) -> int:
        return self.support[0]

    def overlaps(self, other: "Piece") -> bool:
        a, b = self.support, other.support
        return a[0] <= b[-1] and b[0] <= a[-1]

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Piece":
        if len(text) >= 2 and text[0] in ("m", "d") and text[1:].isdigit():
            return cls(text[0], int(text[1:]))
        raise ValueError(f"cannot parse piece {text!r}")


HeapWord = tuple[Piece, ...]


def parse_heap_word(text: str) -> HeapWord:
    """Whitespace-separated piece tokens, e.g. "m0 d2 m3"."""
    return tuple(Piece.parse(tok) for tok in text.split())


def heap_word_text(word: Iterable[Piece]) -> str:
    return " ".join(str(p) for p in word)


@dataclass(frozen=True)
class PlacedPiece:
    piece: Piece
    level: int

    def __str__(self) -> str:
        return f"{self.piece}@{self.level}"


@dataclass(frozen=True)
class Heap:
    """A settled configuration, stored in canonical reading order."""

    placed: tuple[PlacedPiece, ...]

    @classmethod
    def from_placed(cls, placed: Iterable[PlacedPiece]) -> "Heap":
        ordered = tuple(
            sorted(placed, key=lambda pp: (pp.level, pp.piece.min_col))
        )
        return cls(ordered)

    @property
    def size(self) -> int:
        return len(self.placed)

    @property
    def max_level(self) -> int:
        return max((pp.level for pp in self.placed), default=-1)

    def columns(self) -> tuple[int, ...]:
        cols = {c for pp in self.placed for c in pp.piece.support}
        return tuple(sorted(cols))

    def to_json_dict(self) -> dict:
        return {
            "pieces": [
                {"kind": pp.piece.kind, "i": pp.piece.index, "level": pp.level}
                for pp in self.placed
            ]
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "Heap":
        return cls.from_placed(
            PlacedPiece(Piece(entry["kind"], entry["i"]), entry["level"])
            for entry in data["pieces"]
        )

    def __str__(self) -> str:
        return " ".join(str(pp) for pp in self.placed)


def settle(word: HeapWord) -> Heap:
    """Drop the pieces of a word one by one onto the needles."""
    placed: list[PlacedPiece] = []
    for piece in word:
        level = 0
        for earlier in placed:
            if earlier.piece.overlaps(piece):
                level = max(level, earlier.level + 1)
        placed.append(PlacedPiece(piece, level))
    return Heap.from_placed(placed)


def canonical_word(heap: Heap) -> HeapWord:
    """Bottom row to top, left to right within a row."""
    return tuple(pp.piece for pp in heap.placed)


def heaps_equivalent(w1: HeapWord, w2: HeapWord) -> bool:
    return settle(w1) == settle(w2)


def pyramid_summit(heap: Heap) -> Piece | None:
    """The unique maximal piece if the heap is a pyramid, else None.

    A piece is maximal when no piece with overlapping columns sits at a
    higher level; the empty heap has no summit.
    """
    maximal = [
        pp
        for pp in heap.placed
        if not any(
            other.level > pp.level and other.piece.overlaps(pp.piece)
            for other in heap.placed
        )
    ]
    if len(maximal) == 1:
        return maximal[0].piece
    return None


def motzkin_to_heap(word: PathWord) -> HeapWord:
    """Right-to-left reading of a closed path word, descents dropped.

    a_i becomes the dimer d_{i+1} and c_i the monomer m_i.
    """
    if not word.is_closed:
        raise ValueError("path word must start and end at level 0")
    out: list[Piece] = []
    for letter in reversed(word.letters):
        if letter.kind == "a":
            out.append(Piece("d", letter.height + 1))
        elif letter.kind == "c":
            out.append(Piece("m", letter.height))
    return tuple(out)


def heap_to_motzkin(heap: Heap) -> MotzkinPath:
    """Reconstruct the unique closed path whose image is this heap.

    Walk the path backwards: repeatedly take away a minimal piece of the
    remaining heap, padding with the dropped descents as the walk climbs.
    The reversed-walk height g may only be raised (each reinserted descent
    adds one), so a monomer m_i is consumable when g <= i and a dimer
    d_{i+1} when g <= i+1.  A completion must consume everything and return
    to g = 0.  Exactly one completion may exist; anything else signals that
    the heap is outside the image, or a broken bijection.
    """
    summit = pyramid_summit(heap)
    if summit is None:
        raise NotInImageError("heap is not a pyramid")
    if summit not in (Piece("m", 0), Piece("d", 1)):
        raise NotInImageError(f"summit {summit} is neither m0 nor d1")
    placed = heap.placed
    n = len(placed)
    full = (1 << n) - 1
    solutions: list[tuple[Step, ...]] = []
    letters: list[Step] = []

    def minimal(idx: int, mask: int) -> bool:
        pp = placed[idx]
        for j in range(n):
            if mask & (1 << j) or j == idx:
                continue
            other = placed[j]
            if other.level < pp.level and other.piece.overlaps(pp.piece):
                return False
        return True

    def rec(mask: int, g: int) -> None:
        if len(solutions) > 1:
            return
        if mask == full:
            if g == 0:
                solutions.append(tuple(letters))
            return
        for idx in range(n):
            if mask & (1 << idx) or not minimal(idx, mask):
                continue
            piece = placed[idx].piece
            if piece.kind == "m":
                target = piece.index
                climb = target - g
                if climb < 0:
                    continue
                letters.extend([Step.SE] * climb)
                letters.append(Step.E)
            else:
                target = piece.index  # dimer d_{i+1}: climb to i+1, land at i
                climb = target - g
                if climb < 0:
                    continue
                letters.extend([Step.SE] * climb)
                letters.append(Step.NE)
                target -= 1
            rec(mask | (1 << idx), target)
            del letters[len(letters) - climb - 1 :]

    rec(0, 0)
    if not solutions:
        raise NotInImageError("no closed path settles to this heap")
    if len(solutions) > 1:
        raise BijectionViolationError(
            "several closed paths settle to the same heap"
        )
    steps = tuple(reversed(solutions[0]))
    return MotzkinPath(0, steps)


def path_to_heap(path: MotzkinPath) -> Heap:
    """Settled image of a closed path."""
    return settle(motzkin_to_heap(path_word(path)))
