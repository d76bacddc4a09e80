import math
import random

import pytest
from hypothesis import given, strategies as st

from activefill.questions import (
    Belief,
    ContradictoryBeliefError,
    InvalidDistributionError,
    NonTerminationError,
    QuestionInstance,
    SizeLimitError,
    UnknownQuestionError,
    answer_distribution,
    binary_search_instance,
    brute_force_optimal_depth,
    build_greedy_plan,
    condition,
    conditional_entropy,
    entropy,
    greedy_next_question,
    initial_belief,
)


def tiny_instance(answers_by_hyp, prior=None):
    """Instance from a per-hypothesis answer row: answers_by_hyp[h][q]."""
    n_h = len(answers_by_hyp)
    n_q = len(answers_by_hyp[0])
    hyps = tuple(range(n_h))
    qs = tuple(range(n_q))
    all_answers = tuple(sorted({row[q] for row in answers_by_hyp for q in range(n_q)}))
    answer_of = {(h, q): answers_by_hyp[h][q] for h in hyps for q in qs}
    if prior is None:
        prior = tuple(1.0 / n_h for _ in hyps)
    return QuestionInstance(hyps, qs, all_answers, answer_of, tuple(prior))


def random_instance(rng, max_hyps=50, max_questions=8, max_answers=4):
    n_h = rng.randint(2, max_hyps)
    n_q = rng.randint(1, max_questions)
    n_a = rng.randint(2, max_answers)
    rows = [[rng.randrange(n_a) for _ in range(n_q)] for _ in range(n_h)]
    raw = [rng.random() + 1e-3 for _ in range(n_h)]
    total = sum(raw)
    prior = [w / total for w in raw]
    return tiny_instance(rows, prior)


class TestEntropy:
    def test_two_thirds_split(self):
        assert entropy([1 / 3, 2 / 3]) == pytest.approx(0.9182958340544896, abs=1e-12)

    def test_point_mass(self):
        assert entropy([1.0, 0.0, 0.0]) == 0.0

    def test_uniform_three(self):
        assert entropy([1 / 3, 1 / 3, 1 / 3]) == pytest.approx(math.log2(3), abs=1e-12)

    def test_negative_entry_rejected(self):
        with pytest.raises(InvalidDistributionError):
            entropy([1.2, -0.2])

    def test_bad_sum_rejected(self):
        with pytest.raises(InvalidDistributionError):
            entropy([0.5, 0.4])

    @given(st.lists(st.floats(min_value=1e-6, max_value=1.0), min_size=1, max_size=10))
    def test_bounds(self, raw):
        total = sum(raw)
        dist = [x / total for x in raw]
        h = entropy(dist)
        assert 0.0 <= h <= math.log2(len(dist)) + 1e-9


class TestAnswerDistribution:
    def test_two_one_split(self):
        inst = tiny_instance([["a"], ["a"], ["b"]])
        dist = answer_distribution(inst, initial_belief(inst), 0)
        assert dist == pytest.approx((2 / 3, 1 / 3))

    def test_single_hypothesis_point_mass(self):
        inst = tiny_instance([["yes"]])
        assert answer_distribution(inst, initial_belief(inst), 0) == (1.0,)

    def test_binary_search_middle_question(self):
        # independent oracle: count insertion points at most 3 among 0..7
        le3 = sum(1 for a in range(8) if a <= 3) / 8
        inst = binary_search_instance(7)
        dist = answer_distribution(inst, initial_belief(inst), 3)
        assert dist == pytest.approx((le3, 1 - le3))
        assert dist == pytest.approx((0.5, 0.5))

    def test_unknown_question(self):
        inst = tiny_instance([["a"], ["b"]])
        with pytest.raises(UnknownQuestionError):
            answer_distribution(inst, initial_belief(inst), 99)


class TestConditionalEntropy:
    def test_even_split_leaves_one_bit(self):
        inst = tiny_instance([["a"], ["a"], ["b"], ["b"]])
        # brute force: both answers leave 2 equally likely hypotheses
        expected = 0.5 * entropy([0.5, 0.5]) + 0.5 * entropy([0.5, 0.5])
        assert conditional_entropy(inst, initial_belief(inst), 0) == pytest.approx(expected)
        assert expected == 1.0

    def test_uninformative_question_keeps_entropy(self):
        inst = tiny_instance([["same"], ["same"], ["same"]])
        belief = initial_belief(inst)
        assert conditional_entropy(inst, belief, 0) == pytest.approx(entropy(belief.weights))

    def test_fully_identifying_question(self):
        inst = tiny_instance([["a"], ["b"], ["c"]])
        assert conditional_entropy(inst, initial_belief(inst), 0) == pytest.approx(0.0)


class TestGreedyNextQuestion:
    def test_collapsed_belief_terminates(self):
        inst = tiny_instance([["a", "x"], ["b", "x"]])
        belief = condition(inst, initial_belief(inst), 0, "a")
        assert greedy_next_question(inst, belief) is None

    def test_binary_search_picks_balanced_split(self):
        inst = binary_search_instance(7)
        belief = initial_belief(inst)
        # oracle: exhaustive argmax over the answer-distribution entropies
        scores = [entropy(answer_distribution(inst, belief, q)) for q in inst.questions]
        best = scores.index(max(scores))
        assert best == 3
        assert greedy_next_question(inst, belief) == 3

    def test_unique_informative_question(self):
        rows = [["x", "x", "x", "x", "x", "a", "x", "x"],
                ["x", "x", "x", "x", "x", "b", "x", "x"]]
        inst = tiny_instance(rows)
        assert greedy_next_question(inst, initial_belief(inst)) == 5

    def test_skewed_prior_changes_first_question(self):
        prior = (0.93,) + (0.01,) * 7
        inst = binary_search_instance(7, prior)
        belief = initial_belief(inst)
        scores = [entropy(answer_distribution(inst, belief, q)) for q in inst.questions]
        oracle = scores.index(max(scores))
        picked = greedy_next_question(inst, belief)
        assert picked == oracle
        assert picked != 3


class TestGreedyPlan:
    def test_binary_search_depth_is_log(self):
        plan = build_greedy_plan(binary_search_instance(7))
        assert plan.depth == 3

    def test_single_hypothesis_plan_is_terminal(self):
        inst = tiny_instance([["a"]])
        plan = build_greedy_plan(inst)
        assert plan.is_terminal
        assert plan.depth == 0

    def test_two_hypotheses_one_question(self):
        inst = tiny_instance([["a"], ["b"]])
        assert build_greedy_plan(inst).depth == 1

    def test_solvable_plans_end_in_point_mass(self):
        rng = random.Random(5)
        for _ in range(30):
            inst = random_instance(rng, max_hyps=8, max_questions=6)
            if brute_force_optimal_depth(inst) is None:
                continue
            for leaf in build_greedy_plan(inst).leaves():
                assert max(leaf.belief.weights) == pytest.approx(1.0)

    def test_ask_nodes_have_children_for_feasible_answers(self):
        inst = binary_search_instance(3)
        plan = build_greedy_plan(inst)
        stack = [plan]
        while stack:
            node = stack.pop()
            if node.is_terminal:
                continue
            dist = answer_distribution(inst, node.belief, node.question)
            feasible = {a for a, p in zip(inst.answers, dist) if p > 0}
            assert set(node.children) == feasible
            stack.extend(node.children.values())


class TestBruteForceOptimalDepth:
    def test_binary_search_seven(self):
        assert brute_force_optimal_depth(binary_search_instance(7)) == 3

    def test_single_hypothesis(self):
        assert brute_force_optimal_depth(tiny_instance([["a"]])) == 0

    def test_unsolvable_flagged(self):
        inst = tiny_instance([["same"], ["same"]])
        assert brute_force_optimal_depth(inst) is None

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            brute_force_optimal_depth(binary_search_instance(14))

    def test_greedy_never_beats_optimal(self):
        rng = random.Random(11)
        for _ in range(40):
            inst = random_instance(rng, max_hyps=7, max_questions=6, max_answers=3)
            optimal = brute_force_optimal_depth(inst)
            if optimal is None:
                continue
            assert optimal <= build_greedy_plan(inst).depth

    def test_greedy_matches_optimal_on_binary_search(self):
        for n in range(1, 13):
            inst = binary_search_instance(n)
            assert build_greedy_plan(inst).depth == brute_force_optimal_depth(inst)


class TestBinarySearchInstance:
    def test_smallest(self):
        inst = binary_search_instance(1)
        assert len(inst.hypotheses) == 2
        assert len(inst.questions) == 2

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            binary_search_instance(0)

    def test_answers_are_thresholds(self):
        inst = binary_search_instance(4)
        assert inst.answer_of[(2, 3)] is True
        assert inst.answer_of[(4, 3)] is False


class TestProperties:
    def test_chain_rule_and_greedy_equivalence(self):
        rng = random.Random(23)
        for _ in range(50):
            inst = random_instance(rng, max_hyps=20, max_questions=6)
            belief = initial_belief(inst)
            h_belief = entropy(belief.weights)
            cond = [conditional_entropy(inst, belief, q) for q in inst.questions]
            gain = [entropy(answer_distribution(inst, belief, q)) for q in inst.questions]
            for c, g in zip(cond, gain):
                assert abs(h_belief - g - c) <= 1e-9
                assert c <= h_belief + 1e-9
            max_gain = max(gain)
            min_cond = min(cond)
            argmax = {q for q, g in zip(inst.questions, gain) if g == max_gain}
            argmin = {q for q, c in zip(inst.questions, cond) if c == min_cond}
            assert argmax == argmin

    def test_conditioning_on_impossible_answer_raises(self):
        inst = tiny_instance([["a"], ["a"]])
        with pytest.raises(ContradictoryBeliefError):
            condition(inst, initial_belief(inst), 0, "b")

    def test_invalid_prior_rejected(self):
        with pytest.raises(InvalidDistributionError):
            tiny_instance([["a"], ["b"]], prior=(0.7, 0.7))

    def test_nontermination_guard_exists(self):
        # plans on legal instances always terminate; the guard is for bugs
        inst = binary_search_instance(5)
        plan = build_greedy_plan(inst)
        assert plan.depth <= len(inst.questions) * len(inst.hypotheses)
        assert NonTerminationError is not None

    def test_belief_requires_normalized_weights(self):
        with pytest.raises(InvalidDistributionError):
            Belief((0.5, 0.2))
