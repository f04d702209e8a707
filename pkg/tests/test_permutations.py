import pytest
from hypothesis import given, strategies as st

from permfib.errors import InvalidInputError, ResourceLimitError
from permfib.permutations import (
    Permutation,
    avoids_consecutive,
    contains_consecutive,
    descent_composition,
    enumerate_symmetric_group,
    increasing_run_lengths,
    inverse,
    is_alternating,
    is_reverse_alternating,
    left_peak_count,
    monotone_pattern,
    reverse,
    right_peak_count,
    standardize,
    statistics,
)


def perm(text: str) -> Permutation:
    return Permutation.from_text(text)


def all_perms(n: int):
    return enumerate_symmetric_group(n)


class TestStandardize:
    def test_worked_example(self):
        assert standardize((8, 3, 6, 1, 4)) == perm("52413")

    def test_empty(self):
        assert standardize(()) == Permutation(())

    def test_fixes_permutations(self):
        assert standardize((5, 2, 4, 1, 3)) == perm("52413")

    def test_duplicates_rejected(self):
        with pytest.raises(InvalidInputError):
            standardize((1, 1, 2))

    def test_idempotent_on_image(self):
        for p in all_perms(5):
            assert standardize(p.letters) == p


class TestInverse:
    def test_worked_example(self):
        assert inverse(perm("23568714")) == perm("71283465")

    def test_identity(self):
        ident = perm("1 2 3 4 5")
        assert inverse(ident) == ident

    def test_second_example(self):
        assert inverse(perm("964123578")) == perm("456372891")

    def test_involution_exhaustive(self):
        for n in range(7):
            for p in all_perms(n):
                assert inverse(inverse(p)) == p


class TestReverse:
    def test_examples(self):
        assert reverse(perm("123")) == perm("321")
        assert reverse(perm("23568714")) == perm("41786532")
        assert reverse(Permutation(())) == Permutation(())

    def test_involution(self):
        for p in all_perms(6):
            assert reverse(reverse(p)) == p


class TestStatistics:
    def test_inverse_peak_example(self):
        report = statistics(perm("23568714"))
        assert report.ipk == 2
        assert report.ilpk == 3

    def test_identity_all_zero(self):
        for n in (1, 2, 5):
            report = statistics(Permutation(tuple(range(1, n + 1))))
            assert (report.des, report.pk, report.lpk, report.ipk, report.ilpk) == (0,) * 5

    def test_n_shaped_example(self):
        report = statistics(perm("1 2 5 10 12 8 6 4 3 7 9 11"))
        assert report.lpk == 1
        assert report.right_valley_positions == (9,)
        assert report.right_valleys == 1

    def test_empty_permutation(self):
        report = statistics(Permutation(()))
        assert report.des == report.pk == report.lpk == report.rpk == 0
        assert report.descent_positions == ()

    def test_position_ranges_and_pk_lpk_bound(self):
        for p in all_perms(6):
            report = statistics(p)
            n = p.n
            assert all(2 <= i <= n - 1 for i in report.peak_positions)
            assert all(1 <= i <= n - 1 for i in report.left_peak_positions)
            assert all(1 <= i <= n - 1 for i in report.descent_positions)
            assert report.pk <= report.lpk <= report.pk + 1


class TestConsecutiveContainment:
    def test_window_example(self):
        assert contains_consecutive(perm("85712643"), perm("123"))

    def test_identity_avoids_descent(self):
        assert not contains_consecutive(perm("1234"), perm("21"))

    def test_avoider_count_in_s4(self):
        # brute force over all 24 permutations
        count = sum(1 for p in all_perms(4) if avoids_consecutive(p, perm("123")))
        assert count == 17

    def test_empty_pattern_rejected(self):
        with pytest.raises(InvalidInputError):
            contains_consecutive(perm("123"), Permutation(()))

    def test_monotone_containment_matches_run_criterion(self):
        for m in (3, 4, 5):
            pattern = monotone_pattern(m)
            for p in all_perms(6):
                parts = descent_composition(p).parts
                expected = any(part >= m for part in parts)
                assert contains_consecutive(p, pattern) == expected


class TestDescentComposition:
    def test_worked_example(self):
        assert descent_composition(perm("85712643")).parts == (1, 2, 3, 1, 1)

    def test_identity(self):
        assert descent_composition(perm("12345")).parts == (5,)

    def test_second_example(self):
        assert descent_composition(perm("456372891")).parts == (3, 2, 3, 1)

    def test_empty(self):
        assert descent_composition(Permutation(())).parts == ()

    def test_parts_sum_and_count(self):
        for p in all_perms(7):
            composition = descent_composition(p)
            assert composition.n == p.n
            assert len(composition.parts) == statistics(p).des + 1


class TestAlternating:
    def test_length_one(self):
        assert is_alternating(perm("1"))
        assert is_reverse_alternating(perm("1"))

    def test_examples(self):
        assert is_alternating(perm("132"))
        assert is_reverse_alternating(perm("2143"))
        assert not is_alternating(perm("321"))


class TestRunStatistics:
    def test_peak_counts_from_runs(self):
        # peaks: non-final increasing runs longer than 1;
        # right peaks: all increasing runs longer than 1
        for p in all_perms(7):
            runs = increasing_run_lengths(p.letters)
            report = statistics(p)
            assert report.pk == sum(1 for part in runs[:-1] if part > 1)
            assert right_peak_count(p.letters) == sum(1 for part in runs if part > 1)

    def test_reverse_swaps_left_and_right_peaks(self):
        for p in all_perms(7):
            assert left_peak_count(reverse(p).letters) == right_peak_count(p.letters)


class TestEnumeration:
    def test_zero_length(self):
        assert list(all_perms(0)) == [Permutation(())]

    def test_lexicographic_order(self):
        perms = list(all_perms(3))
        assert len(perms) == 6
        assert perms[0] == perm("123")
        assert perms[-1] == perm("321")
        assert perms == sorted(perms, key=lambda p: p.letters)

    def test_full_count(self):
        assert sum(1 for _ in all_perms(8)) == 40320

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            enumerate_symmetric_group(13)
        # the override flag lifts it (iterator construction only)
        enumerate_symmetric_group(13, allow_large=True)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("PERMFIB_MAX_N", "4")
        with pytest.raises(ResourceLimitError):
            enumerate_symmetric_group(5)
        monkeypatch.setenv("PERMFIB_MAX_N", "not-a-number")
        with pytest.raises(InvalidInputError):
            enumerate_symmetric_group(3)


class TestParsing:
    def test_accepted_forms(self):
        expected = perm("23568714")
        assert Permutation.from_text("2 3 5 6 8 7 1 4") == expected
        assert Permutation.from_text("2,3,5,6,8,7,1,4") == expected
        assert Permutation.from_text("23568714") == expected

    def test_str_is_space_separated(self):
        assert str(perm("23568714")) == "2 3 5 6 8 7 1 4"

    def test_rejects_non_permutations(self):
        with pytest.raises(InvalidInputError):
            Permutation.from_text("1 2 2")
        with pytest.raises(InvalidInputError):
            Permutation.from_text("0 1 2")
        with pytest.raises(InvalidInputError):
            Permutation.from_text("abc")


@given(st.integers(0, 20).flatmap(lambda n: st.permutations(tuple(range(1, n + 1)))))
def test_roundtrips_random(letters):
    p = Permutation(tuple(letters))
    assert inverse(inverse(p)) == p
    assert reverse(reverse(p)) == p
    assert standardize(p.letters) == p
