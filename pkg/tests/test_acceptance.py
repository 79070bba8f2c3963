"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Every expected value below is either a frozen literal checked against an
independent derivation or an exact cross-computation between two routes
that share no code.  Stated time budgets are asserted, not aspirational.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines as they print.
"""

import itertools
import time
from fractions import Fraction

from heaporth.basis import (
    CoeffSpec,
    HankelMatrix,
    basis_inverse_check,
    expand_in_basis,
    generate_basis,
    hankel_dets,
    hankel_positivity,
    qn_via_determinant,
    scalar_product,
    stieltjes_moments,
)
from heaporth.contfrac import (
    convergent_difference,
    convergent_qstar_identity,
    j_series,
)
from heaporth.heaps import (
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
from heaporth.numeric import (
    binet_eval,
    catalan_integral,
    gf_coeff_check,
    jacobi_eigen_positivity,
)
from heaporth.paths import PathWord, enumerate_paths, h_tilde
from heaporth.poly import MultiPoly, UniPoly, reciprocal_poly

from oracles import catalan_number, dyck_spec

SYM = CoeffSpec.symbolic()
CAT = CoeffSpec.catalan()
FIB = CoeffSpec.fibonacci()

c0, c1 = MultiPoly.c(0), MultiPoly.c(1)
l1, l2, l3 = (MultiPoly.lam(i) for i in (1, 2, 3))


def _report(num: int, ok: bool, elapsed: float, what: str) -> None:
    line = f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {what}"
    print(line)
    assert ok, line


def test_criterion_01_symbolic_moments():
    t0 = time.monotonic()
    mu4 = stieltjes_moments(4, SYM).mu[4]
    ok = mu4 == c0**4 + 3 * c0**2 * l1 + 2 * c0 * c1 * l1 + c1**2 * l1 + l1**2 + l1 * l2
    mu6 = stieltjes_moments(6, dyck_spec()).mu[6]
    ok &= mu6 == l1 * l2 * l3 + l1 * l2**2 + 2 * l1**2 * l2 + l1**3
    elapsed = time.monotonic() - t0
    ok &= elapsed < 1.0
    _report(1, ok, elapsed, "symbolic fourth moment; sixth moment at c=0")


def test_criterion_02_catalan():
    t0 = time.monotonic()
    mu = stieltjes_moments(16, CAT)
    ok = all(
        mu.mu[n] == (MultiPoly.const(catalan_number(n // 2)) if n % 2 == 0 else MultiPoly.zero())
        for n in range(17)
    )
    mu_det = stieltjes_moments(13, CAT)
    for n in range(7):
        d, chi = hankel_dets(n, mu_det)
        ok &= d == MultiPoly.one() and chi.is_zero
    series = j_series(16, CAT)
    ok &= all(
        series.coefficient(n)
        == (MultiPoly.const(catalan_number(n // 2)) if n % 2 == 0 else MultiPoly.zero())
        for n in range(17)
    )
    elapsed = time.monotonic() - t0
    ok &= elapsed < 5.0
    _report(2, ok, elapsed, "catalan moments, determinants, fraction series")


def test_criterion_03_fibonacci():
    t0 = time.monotonic()
    mu = stieltjes_moments(16, FIB)
    ok = all(
        mu.mu[n]
        == (
            MultiPoly.const((-1) ** (n // 2) * catalan_number(n // 2))
            if n % 2 == 0
            else MultiPoly.zero()
        )
        for n in range(17)
    )
    mu_det = stieltjes_moments(13, FIB)
    for n in range(7):
        d, chi = hankel_dets(n, mu_det)
        ok &= d == MultiPoly.const((-1) ** ((n + 1) // 2))
        if n <= 5:
            ok &= chi.is_zero
    basis = generate_basis(10, FIB)
    for n in range(7):
        ok &= qn_via_determinant(n, mu_det) == basis.poly(n)
    mu20 = stieltjes_moments(20, FIB)
    x7 = expand_in_basis(UniPoly.monomial(7), basis, mu20)
    ok &= [q.constant_value() for q in x7] == [0, -14, 0, 14, 0, -6, 0, 1]
    x8 = expand_in_basis(UniPoly.monomial(8), basis, mu20)
    ok &= [q.constant_value() for q in x8] == [14, 0, -28, 0, 20, 0, -7, 0, 1]
    for n in range(11):
        expand_in_basis(UniPoly.monomial(n), basis, mu20)  # reconstruction asserted inside
    elapsed = time.monotonic() - t0
    ok &= elapsed < 30.0
    _report(3, ok, elapsed, "signed moments, determinant formulas, expansions")


def test_criterion_04_triangle_three_ways():
    t0 = time.monotonic()
    mu = stieltjes_moments(16, SYM)
    basis = generate_basis(8, SYM)
    ok = True
    for n in range(9):
        for k in range(9):
            triangle = mu.h_entry(n, k)
            ok &= h_tilde(n, k, SYM) == triangle
            ok &= scalar_product(UniPoly.monomial(n), basis.poly(k), mu) == triangle
    series = j_series(12, SYM)
    for k in range(7):
        qk_star = reciprocal_poly(basis.poly(k), k)
        for n in range(7):
            ok &= (series.truncate(n + k) * qk_star).coefficient(n + k) == mu.h_entry(n, k)
    elapsed = time.monotonic() - t0
    _report(4, ok, elapsed, "path sums = triangle = scalar products; series extraction")


def test_criterion_05_determinant_ratios():
    t0 = time.monotonic()
    ok = True
    for spec, top in ((SYM, 4), (CAT, 6), (FIB, 6)):
        mu = stieltjes_moments(2 * top + 1, spec)
        d_prev, chi_prev = MultiPoly.one(), MultiPoly.zero()
        for n in range(top + 1):
            d_n, chi_n = hankel_dets(n, mu)
            ok &= d_n == spec.lam_product(n) * d_prev
            ok &= spec.c(n) * d_n * d_prev == chi_n * d_prev - chi_prev * d_n
            d_prev, chi_prev = d_n, chi_n
    mu = stieltjes_moments(10, SYM)
    for n in range(5):
        csum = MultiPoly.sum(SYM.c(i) for i in range(n + 1))
        ok &= mu.h_entry(n + 1, n) == csum * SYM.lam_product(n)
    elapsed = time.monotonic() - t0
    _report(5, ok, elapsed, "determinant ratio and difference formulas")


def test_criterion_06_inverse_matrices():
    t0 = time.monotonic()
    ok = True
    for spec, top in ((SYM, 4), (CAT, 8), (FIB, 8)):
        basis = generate_basis(top, spec)
        mu = stieltjes_moments(top, spec)
        ok &= basis_inverse_check(top, basis, mu)
    elapsed = time.monotonic() - t0
    _report(6, ok, elapsed, "triangle/coefficient matrices invert each other")


def test_criterion_07_convergents():
    t0 = time.monotonic()
    ok = True
    for spec, top in ((SYM, 3), (CAT, 5), (FIB, 5)):
        for n in range(top + 1):
            ok &= convergent_qstar_identity(n, spec)
        for n in range(1, top + 1):
            ok &= convergent_difference(n, spec)
    elapsed = time.monotonic() - t0
    _report(7, ok, elapsed, "ratio and difference identities for convergents")


def test_criterion_08_path_heap_bijection():
    t0 = time.monotonic()
    ok = True
    images = set()
    total = 0
    for length in range(1, 9):
        for path in enumerate_paths(0, 0, length):
            total += 1
            heap = path_to_heap(path)
            summit = pyramid_summit(heap)
            ok &= summit in (Piece("m", 0), Piece("d", 1))
            ok &= all(0 <= col <= path.max_level for col in heap.columns())
            if path.is_dyck:
                ok &= all(pp.piece.kind == "d" for pp in heap.placed)
                ok &= summit == Piece("d", 1)
            dimers = sum(1 for pp in heap.placed if pp.piece.kind == "d")
            ok &= 2 * dimers + (heap.size - dimers) == length
            ok &= heap not in images
            images.add(heap)
            ok &= heap_to_motzkin(heap) == path  # unique completion asserted inside
    elapsed = time.monotonic() - t0
    ok &= elapsed < 30.0
    _report(8, ok, elapsed, f"all {total} closed paths to length 8, map and inverse")


def test_criterion_09_worked_example():
    t0 = time.monotonic()
    w1 = parse_heap_word("m0 d2 m2 d1 m1 d2 m3 m3")
    w2 = parse_heap_word("m3 d2 m0 d1 m3 m1 m2 d2")
    ok = heaps_equivalent(w1, w2)
    ok &= heap_word_text(canonical_word(settle(w1))) == "m0 d2 m3 d1 m2 m3 m1 d2"
    word = PathWord.parse("a0 c1 a1 b2 c1 a1 a2 b3 b2 b1 c0 a0 b1")
    image = motzkin_to_heap(word)
    ok &= heaps_equivalent(image, parse_heap_word("d1 d3 m0 d2 m1 d2 m1 d1"))
    elapsed = time.monotonic() - t0
    _report(9, ok, elapsed, "worked words settle, read back, and map as recorded")


def test_criterion_10_numeric():
    t0 = time.monotonic()
    basis = generate_basis(20, FIB)
    ok = True
    for n in range(21):
        poly = basis.poly(n)
        for x in (-2, -1, Fraction(-1, 2), Fraction(1, 2), 1, 3):
            exact = float(poly.evaluate(Fraction(x)))
            ok &= abs(binet_eval(n, float(x)) - exact) <= 1e-9 * max(1.0, abs(exact))
    for m in range(7):
        ok &= abs(catalan_integral(m).value - catalan_number(m)) <= 1e-8
    ok &= gf_coeff_check(10)
    mu = stieltjes_moments(12, CAT)
    for n in range(7):
        matrix = HankelMatrix.plain(n, mu)
        verdict = hankel_positivity(matrix)
        ok &= verdict.minors == (Fraction(1),) * (n + 1)
        ok &= jacobi_eigen_positivity(matrix) is verdict.positive_definite
    elapsed = time.monotonic() - t0
    _report(10, ok, elapsed, "closed form, quadrature, series, eigen signs")


def test_criterion_11_word_closure_oracle():
    t0 = time.monotonic()
    pieces = [Piece("m", i) for i in range(4)] + [Piece("d", i) for i in (1, 2, 3)]
    k = len(pieces)
    commutes = [[not a.overlaps(b) for b in pieces] for a in pieces]
    ok = True
    checked = 0
    for length in range(1, 8):
        groups: dict = {}
        for ids in itertools.product(range(k), repeat=length):
            heap = settle(tuple(pieces[i] for i in ids))
            groups.setdefault(heap, set()).add(ids)
        for members in groups.values():
            start = next(iter(members))
            closure = {start}
            stack = [start]
            while stack:
                cur = stack.pop()
                for i in range(length - 1):
                    a, b = cur[i], cur[i + 1]
                    if commutes[a][b]:
                        nxt = cur[:i] + (b, a) + cur[i + 2 :]
                        if nxt not in closure:
                            closure.add(nxt)
                            stack.append(nxt)
            ok &= closure == members
            checked += len(members)
    elapsed = time.monotonic() - t0
    _report(11, ok, elapsed, f"equivalence = swap closure on all {checked} words")
