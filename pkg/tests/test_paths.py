import pytest

from delannoy.paths import (
    ClassRepresentative,
    PathWord,
    canonicalize,
    class_count,
    class_sizes,
    compositions,
    delannoy_count,
    enumerate_paths,
    equivalence_classes,
)
from series.errors import BudgetError


@pytest.mark.parametrize("n, m, count", [(0, 0, 1), (1, 1, 3), (2, 2, 13), (3, 3, 63), (2, 4, 41), (5, 1, 11)])
def test_delannoy_numbers(n, m, count):
    assert delannoy_count(n, m) == count
    assert len(enumerate_paths(n, m)) == count


def test_enumeration_is_sorted_and_ends_at_target():
    words = enumerate_paths(3, 2)
    assert words == sorted(words)
    assert len(set(words)) == len(words)
    assert all((w.n, w.m) == (3, 2) for w in words)
    assert [str(w) for w in enumerate_paths(1, 1)] == ["D", "HV", "VH"]


def test_swap_classes():
    assert canonicalize(PathWord.parse("HV")) == canonicalize(PathWord.parse("vh"))
    rep = canonicalize(PathWord.parse("HVDHHV"))
    assert str(rep) == "VHDVHH"
    assert rep.k == 1 and (rep.n, rep.m) == (4, 3)


def test_class_size():
    rep = ClassRepresentative(k=1, v=(1, 1), h=(1, 2))
    assert rep.size() == 2 * 3
    with pytest.raises(ValueError):
        ClassRepresentative(k=1, v=(1,), h=(1, 1))


@pytest.mark.parametrize("n, m", [(0, 3), (2, 2), (3, 2), (4, 4), (5, 3)])
def test_closed_classes_match_exhaustive_census(n, m):
    closed = equivalence_classes(n, m)
    assert closed == equivalence_classes(n, m, mode="oracle")
    for k in range(min(n, m) + 1):
        assert sum(1 for rep in closed if rep.k == k) == class_count(n, m, k)


@pytest.mark.parametrize("n, m", [(2, 2), (3, 4), (1, 5)])
def test_class_sizes_cover_every_path(n, m):
    sizes = class_sizes(n, m)
    assert sum(sizes.values()) == delannoy_count(n, m)
    assert all(size == rep.size() for rep, size in sizes.items())


def test_number_of_classes_is_binomial():
    # with unit weights every class counts once
    assert len(equivalence_classes(2, 2)) == 6
    assert len(equivalence_classes(3, 4)) == 35


def test_compositions():
    assert compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert compositions(0, 3) == [(0, 0, 0)]
    assert compositions(3, 0) == []


def test_oracle_cap(override_settings):
    override_settings(oracle_max=3)
    with pytest.raises(BudgetError):
        enumerate_paths(4, 1)
    with pytest.raises(BudgetError):
        equivalence_classes(2, 5, mode="oracle")
    assert len(equivalence_classes(2, 5)) == 21


def test_bad_input():
    with pytest.raises(ValueError):
        PathWord.parse("HXV")
    with pytest.raises(ValueError):
        enumerate_paths(-1, 2)
    with pytest.raises(ValueError):
        equivalence_classes(1, 1, mode="fast")


def test_classes_of_two_by_two():
    sizes = class_sizes(2, 2)
    assert sorted(sizes.values(), reverse=True) == [6, 2, 2, 1, 1, 1]
    assert sizes[canonicalize(PathWord.parse("DD"))] == 1


def test_equivalent_words_share_a_representative():
    assert canonicalize(PathWord.parse("VHDVHV")) == canonicalize(PathWord.parse("HVDHVV"))
    assert str(canonicalize(PathWord.parse("VVHHH"))) == "VVHHH"


def test_representatives_have_no_hv_subword():
    reps = equivalence_classes(4, 4, mode="oracle")
    assert all(b"HV" not in rep.word().steps for rep in reps)
    assert len(reps) == sum(class_count(4, 4, k) for k in range(5))


def step_weight(word: PathWord, a: int, b: int) -> int:
    steps = word.steps
    return a ** (steps.count(b"H") + steps.count(b"V")) * b ** steps.count(b"D")


@pytest.mark.parametrize("n", range(7))
def test_representatives_are_unique(n):
    for m in range(7):
        reps = equivalence_classes(n, m, mode="oracle")
        assert len(set(reps)) == len(reps)
        assert all(canonicalize(rep.word()) == rep for rep in reps)
        assert all(b"HV" not in rep.word().steps for rep in reps)
        assert len(reps) == sum(class_count(n, m, k) for k in range(min(n, m) + 1))


@pytest.mark.parametrize("n, m", [(2, 2), (3, 4), (5, 5), (6, 3)])
def test_weight_is_constant_on_classes(n, m):
    for w in enumerate_paths(n, m):
        rep = canonicalize(w)
        assert rep.k == w.steps.count(b"D")
        assert step_weight(w, 2, 3) == step_weight(rep.word(), 2, 3)
