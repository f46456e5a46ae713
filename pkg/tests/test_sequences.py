import pytest

from landau.sequences import (
    AlreadyRegular,
    AlreadyTransitive,
    Converged,
    LandauSequence,
    Order,
    ViolationKind,
    ViolationReport,
    c_value,
    compare_order,
    distance,
    down_jump_step,
    down_trace,
    gr_down_step,
    gr_down_trace,
    max_c_value,
    max_down_jumps,
    regular_sequence,
    transitive_sequence,
    up_step,
    up_trace,
    validate_landau,
    validate_strong_landau,
)


def seq(*scores):
    s = validate_landau(scores)
    assert isinstance(s, LandauSequence)
    return s


class TestValidateLandau:
    def test_paper_example_sequence_is_valid(self):
        assert isinstance(validate_landau((1, 1, 2, 3, 4, 5, 6, 6)), LandauSequence)

    @pytest.mark.parametrize("n", range(1, 12))
    def test_transitive_is_valid_for_all_n(self, n):
        assert isinstance(validate_landau(tuple(range(n))), LandauSequence)

    def test_prefix_sum_deficit_reported_at_smallest_k(self):
        report = validate_landau((0, 0, 3))
        assert isinstance(report, ViolationReport)
        assert report.kind is ViolationKind.PREFIX_SUM_DEFICIT
        assert (report.index, report.observed, report.required) == (2, 0, 1)
        assert report.message == "prefix sum 0 < 1 at k=2"

    def test_negative_checked_before_monotonicity(self):
        report = validate_landau((3, -1, 2))
        assert report.kind is ViolationKind.NEGATIVE
        assert report.index == 2

    def test_not_non_decreasing(self):
        report = validate_landau((2, 1, 0))
        assert report.kind is ViolationKind.NOT_NON_DECREASING
        assert report.index == 2

    def test_total_sum_mismatch(self):
        report = validate_landau((1, 2, 3))
        assert report.kind is ViolationKind.TOTAL_SUM_MISMATCH
        assert (report.observed, report.required) == (6, 3)

    def test_empty_input_is_usage_error(self):
        with pytest.raises(ValueError):
            validate_landau(())

    def test_direct_construction_rejects_invalid(self):
        with pytest.raises(ValueError):
            LandauSequence((0, 0, 3))


class TestValidateStrongLandau:
    def test_three_cycle_sequence_is_strong(self):
        assert validate_strong_landau(seq(1, 1, 1))

    def test_transitive_is_not_strong(self):
        assert not validate_strong_landau(seq(0, 1, 2))

    def test_paper_example_is_strong(self):
        # prefix sums 1,2,4,7,11,16,22 all strictly above 0,1,3,6,10,15,21
        assert validate_strong_landau(seq(1, 1, 2, 3, 4, 5, 6, 6))

    def test_single_vertex_is_vacuously_strong(self):
        assert validate_strong_landau(seq(0))


class TestRegularTransitive:
    def test_regular_odd(self):
        assert regular_sequence(5).scores == (2, 2, 2, 2, 2)

    def test_regular_even(self):
        assert regular_sequence(8).scores == (3, 3, 3, 3, 4, 4, 4, 4)

    def test_regular_n1(self):
        assert regular_sequence(1).scores == (0,)

    @pytest.mark.parametrize("n,expected", [(6, (0, 1, 2, 3, 4, 5)), (1, (0,)), (3, (0, 1, 2))])
    def test_transitive(self, n, expected):
        assert transitive_sequence(n).scores == expected

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            regular_sequence(0)
        with pytest.raises(ValueError):
            transitive_sequence(0)


class TestCompareOrder:
    def test_paper_down_jump_is_decreasing(self):
        a = seq(1, 2, 2, 3, 4, 5, 5, 6)
        b = seq(1, 1, 2, 3, 4, 5, 6, 6)
        assert compare_order(a, b) is Order.LESS
        assert compare_order(b, a) is Order.GREATER

    def test_chain_from_gr_down_note(self):
        a = seq(1, 1, 2, 3, 3, 5)
        b = seq(0, 1, 2, 4, 4, 4)
        c = seq(1, 2, 2, 3, 3, 4)
        assert compare_order(b, a) is Order.LESS
        assert compare_order(c, b) is Order.LESS

    def test_equal(self):
        a = seq(1, 1, 1)
        assert compare_order(a, a) is Order.EQUAL

    def test_length_mismatch_is_usage_error(self):
        with pytest.raises(ValueError):
            compare_order(seq(0, 1), seq(0, 1, 2))


class TestDistance:
    def test_paper_transitive_example(self):
        assert distance(transitive_sequence(6), (1, 1, 1, 4, 4, 4)) == 4

    def test_paper_regular_example(self):
        assert distance(regular_sequence(6), (1, 2, 3, 3, 3, 3)) == 2

    def test_identical(self):
        assert distance((3, 1, 4), (3, 1, 4)) == 0

    def test_length_mismatch_is_usage_error(self):
        with pytest.raises(ValueError):
            distance((1,), (1, 2))


class TestDownJump:
    def test_first_paper_step(self):
        step = down_jump_step(seq(1, 1, 2, 3, 4, 5, 6, 6))
        assert step.after.scores == (1, 2, 2, 3, 4, 5, 5, 6)
        assert (step.low, step.high) == (2, 7)

    def test_third_paper_step(self):
        step = down_jump_step(seq(2, 2, 2, 3, 4, 5, 5, 5))
        assert step.after.scores == (2, 2, 3, 3, 4, 4, 5, 5)
        assert (step.low, step.high) == (3, 6)

    def test_regular_input_raises(self):
        with pytest.raises(AlreadyRegular):
            down_jump_step(seq(3, 3, 3, 3, 4, 4, 4, 4))

    def test_paper_worked_trace(self):
        trace = down_trace(seq(1, 1, 2, 3, 4, 5, 6, 6))
        assert len(trace) == 5
        assert trace.end.scores == (3, 3, 3, 3, 4, 4, 4, 4)

    def test_regular_gives_empty_trace(self):
        assert len(down_trace(regular_sequence(9))) == 0

    def test_transitive_7_trace_length(self):
        # d(R_7, Tr_7)/2 = (n^2 - 1)/8 = 6
        trace = down_trace(transitive_sequence(7))
        assert len(trace) == 6
        assert len(trace) == distance(transitive_sequence(7), regular_sequence(7)) // 2

    def test_steps_chain(self):
        trace = down_trace(seq(0, 1, 2, 3, 4, 5))
        for a, b in zip(trace.steps, trace.steps[1:]):
            assert a.after == b.before


class TestGrDownJump:
    def test_first_paper_step(self):
        step = gr_down_step(seq(0, 1, 2, 3, 4, 5), seq(2, 2, 2, 3, 3, 3))
        assert step.after.scores == (1, 1, 2, 3, 3, 5)
        assert (step.low, step.high) == (1, 5)

    def test_second_paper_step(self):
        step = gr_down_step(seq(1, 1, 2, 3, 3, 5), seq(2, 2, 2, 3, 3, 3))
        assert step.after.scores == (1, 2, 2, 3, 3, 4)
        assert (step.low, step.high) == (2, 6)

    def test_converged(self):
        s = seq(2, 2, 2, 3, 3, 3)
        with pytest.raises(Converged):
            gr_down_step(s, s)

    def test_paper_trace_length(self):
        trace = gr_down_trace(seq(2, 2, 2, 3, 3, 3))
        assert len(trace) == 3
        assert trace.start.scores == (0, 1, 2, 3, 4, 5)

    def test_transitive_target_gives_empty_trace(self):
        assert len(gr_down_trace(transitive_sequence(8))) == 0

    def test_two_step_example(self):
        # d(Tr_6, (1,1,1,4,4,4))/2 = 2
        assert len(gr_down_trace(seq(1, 1, 1, 4, 4, 4))) == 2


class TestUpJump:
    def test_first_paper_step(self):
        step = up_step(seq(1, 1, 3, 3, 3, 4))
        assert step.after.scores == (0, 2, 3, 3, 3, 4)
        assert (step.low, step.high) == (1, 2)

    def test_second_paper_step(self):
        step = up_step(seq(0, 2, 3, 3, 3, 4))
        assert step.after.scores == (0, 2, 2, 3, 4, 4)
        assert (step.low, step.high) == (3, 5)

    def test_transitive_raises(self):
        with pytest.raises(AlreadyTransitive):
            up_step(transitive_sequence(6))

    def test_paper_worked_trace(self):
        trace = up_trace(seq(1, 1, 3, 3, 3, 4))
        assert len(trace) == 5
        assert [s.scores for s in trace.sequences()] == [
            (1, 1, 3, 3, 3, 4),
            (0, 2, 3, 3, 3, 4),
            (0, 2, 2, 3, 4, 4),
            (0, 1, 3, 3, 4, 4),
            (0, 1, 2, 4, 4, 4),
            (0, 1, 2, 3, 4, 5),
        ]

    def test_nearly_regular_8_needs_20_jumps(self):
        assert len(up_trace(seq(3, 3, 3, 3, 4, 4, 4, 4))) == 20

    def test_transitive_gives_empty_trace(self):
        assert len(up_trace(transitive_sequence(5))) == 0


class TestCountsAndBounds:
    def test_c_value_nearly_regular_8(self):
        assert c_value(seq(3, 3, 3, 3, 4, 4, 4, 4)) == 20

    @pytest.mark.parametrize("n", range(1, 11))
    def test_c_value_transitive_is_zero(self, n):
        assert c_value(transitive_sequence(n)) == 0

    def test_c_value_regular_7(self):
        assert c_value(seq(3, 3, 3, 3, 3, 3, 3)) == 14

    @pytest.mark.parametrize("n,expected", [(7, 14), (8, 20), (1, 0)])
    def test_max_c_value(self, n, expected):
        assert max_c_value(n) == expected

    @pytest.mark.parametrize("n,expected", [(7, 6), (8, 6), (1, 0), (2, 0)])
    def test_max_down_jumps(self, n, expected):
        assert max_down_jumps(n) == expected

    @pytest.mark.parametrize("n", range(1, 13))
    def test_max_down_jumps_matches_distance(self, n):
        d = distance(regular_sequence(n), transitive_sequence(n))
        assert max_down_jumps(n) == d // 2
