"""Weighted Motzkin and Dyck lattice paths.

A path proceeds by North-East, East and South-East steps and stays weakly
above the ground line.  Its word records one letter per edge -- a, c or b
for NE, E, SE -- subscripted by the height at which the edge starts.  The
weight of a word sends a_i to lambda_{i+1}, b_i to 1 and c_i to c_i, read
through whichever coefficient spec is in force; summing weights over all
paths of a given length and endpoint pair reproduces the moment triangle.

Enumeration is deliberately explicit and exponential: these paths serve as
the independent cross-check for the fast triangle recursion, so they must
not share code with it.  Lengths are capped to keep that honest use cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .basis import CoeffSpec
from .poly import MultiPoly

ENUMERATION_CAP = 18


class EnumerationCapError(ValueError):
    """Explicit path enumeration was asked for beyond the supported length."""


class Step(str, Enum):
    NE = "NE"
    E = "E"
    SE = "SE"

    def __str__(self) -> str:  # pragma: no cover - trivial
        return self.value


_DELTA = {Step.NE: 1, Step.E: 0, Step.SE: -1}
_STEP_ORDER = (Step.NE, Step.E, Step.SE)
_STEP_LETTER = {Step.NE: "a", Step.E: "c", Step.SE: "b"}
_LETTER_STEP = {"a": Step.NE, "c": Step.E, "b": Step.SE}


def _trusted(cls, **attrs):
    """Construct a frozen instance without re-running validation.

    Only for values whose invariants the caller has already established;
    exhaustive enumeration would otherwise spend most of its time
    re-walking paths it built to be valid.
    """
    obj = object.__new__(cls)
    for name, value in attrs.items():
        object.__setattr__(obj, name, value)
    return obj


@dataclass(frozen=True)
class MotzkinPath:
    """A step sequence with a starting level; never dips below 0."""

    start_level: int
    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        if self.start_level < 0:
            raise ValueError("start level must be >= 0")
        level = self.start_level
        for s in self.steps:
            level += _DELTA[s]
            if level < 0:
                raise ValueError("path drops below the ground line")

    def levels(self) -> list[int]:
        """Heights visited, including both endpoints (length = steps + 1)."""
        out = [self.start_level]
        for s in self.steps:
            out.append(out[-1] + _DELTA[s])
        return out

    @property
    def end_level(self) -> int:
        return self.start_level + sum(_DELTA[s] for s in self.steps)

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def max_level(self) -> int:
        return max(self.levels())

    @property
    def is_closed(self) -> bool:
        return self.start_level == 0 and self.end_level == 0

    @property
    def is_dyck(self) -> bool:
        return all(s is not Step.E for s in self.steps)

    def to_text(self) -> str:
        return ",".join(s.value for s in self.steps) + f"@{self.start_level}"

    @classmethod
    def parse(cls, text: str) -> "MotzkinPath":
        body, sep, level = text.rpartition("@")
        if not sep:
            body, level = text, "0"
        steps = tuple(
            Step(tok.strip()) for tok in body.split(",") if tok.strip()
        )
        return cls(int(level), steps)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Letter:
    """One edge letter: kind a/b/c tagged with the edge's starting height."""

    kind: str
    height: int

    def __post_init__(self) -> None:
        if self.kind not in ("a", "b", "c"):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.height < 0:
            raise ValueError("letter height must be >= 0")
        if self.kind == "b" and self.height < 1:
            raise ValueError("a descent cannot start at height 0")

    @property
    def next_height(self) -> int:
        return self.height + _DELTA[_LETTER_STEP[self.kind]]

    def __str__(self) -> str:
        return f"{self.kind}{self.height}"

    @classmethod
    def parse(cls, text: str) -> "Letter":
        if len(text) >= 2 and text[0] in ("a", "b", "c") and text[1:].isdigit():
            return cls(text[0], int(text[1:]))
        raise ValueError(f"cannot parse path letter {text!r}")


@dataclass(frozen=True)
class PathWord:
    """The a/b/c letter sequence of a path; heights must chain correctly."""

    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        for prev, cur in zip(self.letters, self.letters[1:]):
            if cur.height != prev.next_height:
                raise ValueError(
                    f"letter {cur} does not start where {prev} ends"
                )

    @property
    def start_level(self) -> int:
        return self.letters[0].height if self.letters else 0

    @property
    def end_level(self) -> int:
        return self.letters[-1].next_height if self.letters else 0

    @property
    def is_closed(self) -> bool:
        return self.start_level == 0 and self.end_level == 0

    def to_text(self) -> str:
        return " ".join(str(letter) for letter in self.letters)

    @classmethod
    def parse(cls, text: str) -> "PathWord":
        return cls(tuple(Letter.parse(tok) for tok in text.split()))

    def __str__(self) -> str:
        return self.to_text()

    def __len__(self) -> int:
        return len(self.letters)


def enumerate_paths(r: int, s: int, n: int) -> list[MotzkinPath]:
    """All n-step paths from level r to level s, in lexicographic step order.

    The order is NE < E < SE.  The list is empty whenever s is unreachable
    (fewer steps than the level gap).
    """
    if r < 0 or s < 0:
        raise ValueError("levels must be >= 0")
    if n < 0:
        raise ValueError("length must be >= 0")
    if n > ENUMERATION_CAP:
        raise EnumerationCapError(
            f"explicit enumeration capped at {ENUMERATION_CAP} steps"
        )
    results: list[MotzkinPath] = []
    acc: list[Step] = []

    def rec(level: int, remaining: int) -> None:
        if abs(level - s) > remaining:
            return
        if remaining == 0:
            results.append(_trusted(MotzkinPath, start_level=r, steps=tuple(acc)))
            return
        for step in _STEP_ORDER:
            nxt = level + _DELTA[step]
            if nxt < 0:
                continue
            acc.append(step)
            rec(nxt, remaining - 1)
            acc.pop()

    rec(r, n)
    return results


def path_word(path: MotzkinPath) -> PathWord:
    """Letter-for-step transcription, heights read off the path."""
    letters = []
    level = path.start_level
    for step in path.steps:
        letters.append(_trusted(Letter, kind=_STEP_LETTER[step], height=level))
        level += _DELTA[step]
    return _trusted(PathWord, letters=tuple(letters))


def path_from_word(word: PathWord) -> MotzkinPath:
    steps = tuple(_LETTER_STEP[letter.kind] for letter in word.letters)
    return MotzkinPath(word.start_level, steps)


def path_weight(word: PathWord, spec: CoeffSpec) -> MultiPoly:
    """Commutative weight: a_i -> lambda_{i+1}, b_i -> 1, c_i -> c_i."""
    out = MultiPoly.one()
    for letter in word.letters:
        if letter.kind == "a":
            out = out * spec.lam(letter.height + 1)
        elif letter.kind == "c":
            out = out * spec.c(letter.height)
    return out


def h_tilde(n: int, k: int, spec: CoeffSpec) -> MultiPoly:
    """Weight sum over all n-step paths from level 0 to level k.

    Walks the same step tree as enumerate_paths but keeps the running
    prefix weight instead of materializing each path, and abandons any
    branch whose weight has already collapsed to zero (such branches
    contribute nothing to the sum).  The object-level pipeline
    path_weight(path_word(...)) computes identical summands; the tests
    hold the two routes against each other.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    if n > ENUMERATION_CAP:
        raise EnumerationCapError(
            f"explicit enumeration capped at {ENUMERATION_CAP} steps"
        )
    parts: list[MultiPoly] = []

    def rec(level: int, remaining: int, weight: MultiPoly) -> None:
        if abs(level - k) > remaining or weight.is_zero:
            return
        if remaining == 0:
            parts.append(weight)
            return
        rec(level + 1, remaining - 1, weight * spec.lam(level + 1))
        rec(level, remaining - 1, weight * spec.c(level))
        if level > 0:
            rec(level - 1, remaining - 1, weight)

    rec(0, n, MultiPoly.one())
    return MultiPoly.sum(parts)


def moments_by_paths(n: int, spec: CoeffSpec) -> MultiPoly:
    """The n-th moment as a sum over closed n-step paths."""
    return h_tilde(n, 0, spec)
