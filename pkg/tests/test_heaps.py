"""Settling, canonical words, pyramids, and the closed-path bijection."""

import pytest

from heaporth.heaps import (
    Heap,
    NotInImageError,
    Piece,
    canonical_word,
    heap_to_motzkin,
    heap_word_text,
    heaps_equivalent,
    motzkin_to_heap,
    parse_heap_word,
    path_to_heap,
    pyramid_summit,
    settle,
)
from heaporth.paths import MotzkinPath, PathWord, Step, enumerate_paths, path_word

from oracles import swap_closure

# the worked example: two words with the same heap and its canonical reading
W1 = "m0 d2 m2 d1 m1 d2 m3 m3"
W2 = "m3 d2 m0 d1 m3 m1 m2 d2"
W_CANONICAL = "m0 d2 m3 d1 m2 m3 m1 d2"

# the worked 13-step closed path and the printed reading of its image heap
PATH_WORD_13 = "a0 c1 a1 b2 c1 a1 a2 b3 b2 b1 c0 a0 b1"
IMAGE_WORD_13 = "d1 d3 m0 d2 m1 d2 m1 d1"


class TestPieces:
    def test_supports(self):
        assert Piece("m", 0).support == (0,)
        assert Piece("d", 2).support == (1, 2)

    def test_validation(self):
        with pytest.raises(ValueError):
            Piece("d", 0)
        with pytest.raises(ValueError):
            Piece("m", -1)
        with pytest.raises(ValueError):
            Piece.parse("q3")

    def test_word_text_roundtrip(self):
        word = parse_heap_word(W1)
        assert heap_word_text(word) == W1


class TestSettle:
    def test_worked_example_levels(self):
        heap = settle(parse_heap_word(W1))
        levels = [(str(pp.piece), pp.level) for pp in heap.placed]
        assert levels == [
            ("m0", 0), ("d2", 0), ("m3", 0),
            ("d1", 1), ("m2", 1), ("m3", 1),
            ("m1", 2), ("d2", 3),
        ]

    def test_empty_word(self):
        assert settle(()) == Heap(())

    def test_self_conflict_stacks(self):
        heap = settle(parse_heap_word("m0 m0"))
        assert [pp.level for pp in heap.placed] == [0, 1]

    def test_canonical_word(self):
        assert heap_word_text(canonical_word(settle(parse_heap_word(W1)))) == W_CANONICAL

    def test_second_word_same_heap(self):
        assert heap_word_text(canonical_word(settle(parse_heap_word(W2)))) == W_CANONICAL

    def test_canonical_word_settles_back(self):
        heap = settle(parse_heap_word(W1))
        assert settle(canonical_word(heap)) == heap

    def test_canonicalization_idempotent(self):
        word = parse_heap_word(W2)
        once = canonical_word(settle(word))
        assert canonical_word(settle(once)) == once


class TestEquivalence:
    def test_worked_pair(self):
        assert heaps_equivalent(parse_heap_word(W1), parse_heap_word(W2))

    def test_disjoint_commute(self):
        assert heaps_equivalent(parse_heap_word("m0 d2"), parse_heap_word("d2 m0"))

    def test_different_multisets(self):
        assert not heaps_equivalent(parse_heap_word("m0 m0"), parse_heap_word("m0"))

    def test_conflicting_do_not_commute(self):
        assert not heaps_equivalent(parse_heap_word("m0 d1"), parse_heap_word("d1 m0"))

    def test_matches_swap_closure_short_words(self):
        # full-length exhaustive version lives in the acceptance suite
        pieces = [Piece("m", i) for i in range(4)] + [Piece("d", i) for i in (1, 2, 3)]
        import itertools

        for length in range(1, 5):
            groups: dict[Heap, set] = {}
            for word in itertools.product(pieces, repeat=length):
                groups.setdefault(settle(word), set()).add(word)
            for members in groups.values():
                assert swap_closure(next(iter(members))) == members


class TestPyramids:
    def test_worked_heap_is_not_a_pyramid(self):
        assert pyramid_summit(settle(parse_heap_word(W1))) is None

    def test_single_dimer(self):
        assert pyramid_summit(settle(parse_heap_word("d1"))) == Piece("d", 1)

    def test_empty_heap(self):
        assert pyramid_summit(Heap(())) is None

    def test_path_images_are_pyramids(self):
        for n in range(1, 7):
            for path in enumerate_paths(0, 0, n):
                summit = pyramid_summit(path_to_heap(path))
                assert summit in (Piece("m", 0), Piece("d", 1))


class TestMotzkinToHeap:
    def test_single_arch(self):
        assert motzkin_to_heap(PathWord.parse("a0 b1")) == (Piece("d", 1),)

    def test_single_flat(self):
        assert motzkin_to_heap(PathWord.parse("c0")) == (Piece("m", 0),)

    def test_worked_path(self):
        image = motzkin_to_heap(PathWord.parse(PATH_WORD_13))
        assert heap_word_text(image) == "d1 m0 d3 d2 m1 d2 m1 d1"
        assert heaps_equivalent(image, parse_heap_word(IMAGE_WORD_13))

    def test_open_word_rejected(self):
        with pytest.raises(ValueError):
            motzkin_to_heap(PathWord.parse("a0"))

    def test_dyck_paths_become_all_dimer_pyramids(self):
        for n in (2, 4, 6):
            for path in enumerate_paths(0, 0, n):
                if not path.is_dyck:
                    continue
                heap = path_to_heap(path)
                assert all(pp.piece.kind == "d" for pp in heap.placed)
                assert pyramid_summit(heap) == Piece("d", 1)

    def test_step_count_is_2d_plus_m(self):
        for n in range(1, 7):
            for path in enumerate_paths(0, 0, n):
                heap = path_to_heap(path)
                d = sum(1 for pp in heap.placed if pp.piece.kind == "d")
                m = heap.size - d
                assert 2 * d + m == n


class TestHeapToMotzkin:
    def test_single_monomer(self):
        path = heap_to_motzkin(settle(parse_heap_word("m0")))
        assert path == MotzkinPath(0, (Step.E,))

    def test_single_dimer(self):
        path = heap_to_motzkin(settle(parse_heap_word("d1")))
        assert path == MotzkinPath(0, (Step.NE, Step.SE))

    def test_worked_roundtrip(self):
        word = PathWord.parse(PATH_WORD_13)
        heap = settle(motzkin_to_heap(word))
        reconstructed = heap_to_motzkin(heap)
        assert path_word(reconstructed).to_text() == PATH_WORD_13

    def test_roundtrip_exhaustive_small(self):
        for n in range(1, 7):
            for path in enumerate_paths(0, 0, n):
                assert heap_to_motzkin(path_to_heap(path)) == path

    def test_injective_small(self):
        seen = set()
        for n in range(1, 7):
            for path in enumerate_paths(0, 0, n):
                heap = path_to_heap(path)
                assert heap not in seen
                seen.add(heap)

    def test_wrong_summit_rejected(self):
        with pytest.raises(NotInImageError):
            heap_to_motzkin(settle(parse_heap_word("m1")))
        with pytest.raises(NotInImageError):
            heap_to_motzkin(settle(parse_heap_word("d2")))

    def test_non_pyramid_rejected(self):
        with pytest.raises(NotInImageError):
            heap_to_motzkin(settle(parse_heap_word("m0 m2")))

    def test_empty_heap_rejected(self):
        with pytest.raises(NotInImageError):
            heap_to_motzkin(Heap(()))


class TestJson:
    def test_golden(self):
        heap = settle(parse_heap_word("m0 d2"))
        assert heap.to_json_dict() == {
            "pieces": [
                {"kind": "m", "i": 0, "level": 0},
                {"kind": "d", "i": 2, "level": 0},
            ]
        }

    def test_roundtrip(self):
        heap = settle(parse_heap_word(W1))
        assert Heap.from_json_dict(heap.to_json_dict()) == heap
