import itertools
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mnspecht.core import (
    Box,
    Composition,
    ParseError,
    Partition,
    Permutation,
    SkewShape,
    border_strips,
    centralizer_order,
    class_representative,
    compose,
    conjugate,
    cycle_type,
    dominates,
    from_cycles,
    height,
    is_border_strip,
    is_horizontal_strip,
    is_subpartition,
    is_vertical_strip,
    long_cycle,
    parse_partition,
    parse_skew_shape,
    partitions_of,
    sign,
    skew_shapes_of,
    subpartitions,
)


# -- independent brute-force helpers ----------------------------------------------


def brute_partitions(n):
    """Sorted multisets of positive integers summing to n, by brute force."""
    found = set()
    for k in range(n + 1):
        for combo in itertools.combinations_with_replacement(range(1, n + 1), k):
            if sum(combo) == n:
                found.add(tuple(sorted(combo, reverse=True)))
    return found


def brute_subpartitions(la):
    ranges = [range(p + 1) for p in la]
    for mu in itertools.product(*ranges):
        if all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)):
            yield Partition(mu)


def brute_connected(boxes):
    boxes = set(boxes)
    if not boxes:
        return True
    comp = {min(boxes)}
    grew = True
    while grew:
        grew = False
        for (i, j) in list(boxes - comp):
            if any(abs(i - a) + abs(j - b) == 1 for a, b in comp):
                comp.add((i, j))
                grew = True
    return comp == boxes


def brute_border_strip(la, mu):
    boxes = {(i + 1, j + 1) for i in range(len(la)) for j in range(la[i]) if j >= (mu[i] if i < len(mu) else 0)}
    square = any({(i, j + 1), (i + 1, j), (i + 1, j + 1)} <= boxes for i, j in boxes)
    return bool(boxes) and brute_connected(boxes) and not square


# -- partitions and shapes ------------------------------------------------------------


@pytest.mark.parametrize(
    "p, want",
    [((5, 1, 1), (3, 1, 1, 1, 1)), ((), ()), ((4, 4, 4), (3, 3, 3, 3))],
)
def test_conjugate_examples(p, want):
    assert conjugate(p) == want


def test_conjugate_is_involution():
    for n in range(13):
        for p in partitions_of(n):
            assert conjugate(conjugate(p)) == p


def test_partition_validation_and_trailing_zeros():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_is_subpartition():
    assert is_subpartition((4, 3), (4, 4, 4))
    assert is_subpartition((), (5, 2))
    assert not is_subpartition((3, 3), (4, 2))


def test_height():
    assert height(SkewShape((4, 4, 4), (4, 3))) == 1
    assert height(SkewShape((4, 4, 4), (3, 3, 1))) == 2
    assert height(SkewShape((7,))) == 0
    with pytest.raises(ValueError, match="empty skew shape has no height"):
        height(SkewShape((2, 1), (2, 1)))


def test_is_border_strip_examples():
    assert is_border_strip(SkewShape((4, 4, 4), (3, 3, 1)))
    assert not is_border_strip(SkewShape((2, 2)))
    # (3,1)/(2): boxes (1,3) and (2,1)
    assert not brute_border_strip((3, 1), (2,))
    assert not is_border_strip(SkewShape((3, 1), (2,)))


def test_strip_predicates():
    assert is_vertical_strip(SkewShape((2, 1, 1), (1,)))
    assert not is_vertical_strip(SkewShape((2, 2)))
    empty = SkewShape((2, 1), (2, 1))
    assert is_vertical_strip(empty) and is_horizontal_strip(empty)
    assert is_horizontal_strip(SkewShape((3, 1), (1,)))
    assert not is_horizontal_strip(SkewShape((2, 1, 1), (1,)))


def test_border_strips_examples():
    assert border_strips((4, 4, 4), 5) == [((4, 3), 1), ((3, 3, 1), 2)]
    assert border_strips((6,), 6) == [((), 0)]
    # (2,2)/(1) is three connected boxes with no 2x2 block
    assert [mu for mu in brute_subpartitions((2, 2)) if sum(mu) == 1 and brute_border_strip((2, 2), mu)] == [(1,)]
    assert border_strips((2, 2), 3) == [((1,), 1)]
    assert border_strips((2, 2), 4) == []


def test_border_strips_against_brute_force():
    for n in range(1, 11):
        for la in partitions_of(n):
            for k in range(1, n + 1):
                got = border_strips(la, k)
                want = sorted(
                    (mu for mu in brute_subpartitions(la) if sum(mu) == n - k and brute_border_strip(la, mu)),
                    reverse=True,
                )
                assert [mu for mu, _ in got] == want
                for mu, h in got:
                    s = SkewShape(la, mu)
                    assert is_border_strip(s)
                    assert h == height(s) < s.size()


def test_border_strip_implies_subpartition_and_short_height():
    for n in range(1, 7):
        for s in skew_shapes_of(n):
            if is_border_strip(s):
                assert is_subpartition(s.inner, s.outer)
                assert height(s) < s.size()


def test_subpartitions_match_brute_force():
    for la in [(4, 4, 4), (3, 2, 2, 1), (5,), ()]:
        assert sorted(subpartitions(la), reverse=True) == list(subpartitions(la))
        assert set(subpartitions(la)) == set(brute_subpartitions(la))
        assert set(subpartitions(la, 5)) == {mu for mu in brute_subpartitions(la) if sum(mu) == 5}


# -- dominance --------------------------------------------------------------------------


def test_dominates_examples():
    assert dominates((3, 1), (2, 2))
    assert dominates((2, 1, 3), (2, 1, 3))
    assert not dominates((2, 2), (3, 1))
    with pytest.raises(ValueError):
        dominates((2,), (1, 2))


def positive_compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in positive_compositions(n - first):
            yield (first,) + rest


def test_dominates_is_partial_order():
    for n in range(1, 8):
        comps = list(positive_compositions(n))
        rel = {(a, b): dominates(a, b) for a in comps for b in comps}
        for a in comps:
            assert rel[a, a]
        for a, b in itertools.product(comps, repeat=2):
            if a != b:
                assert not (rel[a, b] and rel[b, a])
        if n <= 6:
            for a, b, c in itertools.product(comps, repeat=3):
                if rel[a, b] and rel[b, c]:
                    assert rel[a, c]


def test_composition_length_ignores_trailing_zeros():
    assert Composition((2, 2, 0)).length() == 2
    assert Composition((0, 0)).length() == 0
    assert dominates((2, 2, 0), (2, 2)) and dominates((2, 2), (2, 2, 0))
    assert dominates((3, 1, 0), (2, 2))
    assert not dominates((3, 0, 1), (2, 2, 0))
    assert dominates((2, 2, 0), (2, 0, 2))


# -- enumeration and centralizers ---------------------------------------------------------


def test_partitions_of_small():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(0)) == [()]


def test_partitions_of_count_matches_brute_force():
    assert len(brute_partitions(8)) == 22
    assert len(list(partitions_of(8))) == 22
    for n in range(9):
        got = list(partitions_of(n))
        assert set(got) == brute_partitions(n)
        assert got == sorted(got, reverse=True)


def test_centralizer_order_examples():
    assert centralizer_order((7,)) == 7
    assert centralizer_order((1,) * 6) == factorial(6)
    assert centralizer_order((5, 5, 2)) == 100


def test_centralizer_order_brute_force_small():
    for n in range(1, 6):
        perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
        for ct in partitions_of(n):
            rep = class_representative(ct)
            count = sum(1 for g in perms if compose(g, rep) == compose(rep, g))
            assert count == centralizer_order(ct)


def test_class_equation():
    for n in range(9):
        assert sum(factorial(n) // centralizer_order(c) for c in partitions_of(n)) == factorial(n)


def test_skew_shapes_are_normalized_and_complete():
    for n in range(1, 5):
        shapes = list(skew_shapes_of(n))
        assert len(shapes) == len(set(shapes))
        assert all(s.is_normalized() and s.size() == n for s in shapes)
        # every skew shape in an n x n box normalizes to one of them
        reached = set()
        for la in brute_subpartitions((n,) * n):
            for mu in brute_subpartitions(la):
                if sum(la) - sum(mu) == n:
                    reached.add(SkewShape(la, mu).normalize())
        assert reached == set(shapes)


def test_normalize_removes_empty_rows_and_columns():
    s = SkewShape((3, 2, 1), (2, 2))
    assert s.normalize() == SkewShape((2, 1), (1,))
    assert SkewShape((3, 3), (3, 1)).normalize() == SkewShape((2,))


# -- permutations -----------------------------------------------------------------------


def test_cycle_type_of_example_permutation():
    sigma = from_cycles("(1,2)(3,4,5,6,7)(8,9,10,11,12)")
    assert sigma.n == 12
    assert cycle_type(sigma) == (5, 5, 2)
    assert str(sigma) == "(1,2)(3,4,5,6,7)(8,9,10,11,12)"


def test_sign_examples():
    assert sign(Permutation.identity(5)) == 1
    assert sign(from_cycles("(1,2)")) == -1
    assert str(from_cycles("()", 3)) == "()"


def test_compose_applies_left_first():
    a = from_cycles("(1,2)", 3)
    b = from_cycles("(2,3)", 3)
    # 1 -a-> 2 -b-> 3
    assert compose(a, b)(1) == 3
    assert (a * b) == compose(a, b)
    with pytest.raises(ValueError):
        compose(a, from_cycles("(1,2)", 2))


def test_class_representative_layout():
    assert str(class_representative((5, 5, 2))) == "(1,2,3,4,5)(6,7,8,9,10)(11,12)"
    assert str(long_cycle(4)) == "(1,2,3,4)"


@pytest.mark.parametrize(
    "text, token",
    [("(1,2", ""), ("(1,,2)", ","), ("(1,2)(2,3)", "2"), ("1,2", "1"), ("(1 a)", "a"), ("(0,1)", "0")],
)
def test_from_cycles_errors(text, token):
    with pytest.raises(ParseError) as info:
        from_cycles(text)
    if token:
        assert info.value.token == token


def test_parse_shapes():
    assert parse_partition("4,4,4") == (4, 4, 4)
    assert parse_partition("-") == ()
    assert parse_skew_shape("4,4,4/4,3") == SkewShape((4, 4, 4), (4, 3))
    assert parse_skew_shape("3,1") == SkewShape((3, 1))
    assert parse_skew_shape("3,1/-") == SkewShape((3, 1))
    with pytest.raises(ParseError) as info:
        parse_partition("4,x,1")
    assert info.value.token == "x" and info.value.position == 2
    with pytest.raises(ParseError):
        parse_skew_shape("2,2/3")


def test_box_membership():
    s = SkewShape((4, 4, 4), (3, 3, 1))
    assert Box(1, 4) in s and (3, 2) in s and (1, 1) not in s
    assert s.col_indices[3] == (0, 1, 4)


permutations_st = st.integers(1, 10).flatmap(
    lambda n: st.tuples(*(st.permutations(range(1, n + 1)).map(Permutation) for _ in range(3)))
)


@given(permutations_st)
def test_compose_associative_and_sign_multiplicative(triple):
    a, b, c = triple
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert sign(compose(a, b)) == sign(a) * sign(b)
    assert compose(a, a.inverse()) == Permutation.identity(a.n)


@given(permutations_st)
def test_cycle_type_is_conjugation_invariant(triple):
    a, g, _ = triple
    assert cycle_type(compose(compose(g.inverse(), a), g)) == cycle_type(a)
    assert from_cycles(str(a), a.n) == a
