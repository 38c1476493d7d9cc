"""Unit tests for grounded, complete and stable extension computation."""

import pytest

from deonarg import (
    ArgumentLimitExceeded,
    build_arguments,
    complete_extensions,
    compute_attacks,
    evaluate,
    grounded_extension,
    is_admissible,
    is_conflict_free,
    justified_conclusions,
    parse_theory,
    stable_extensions,
)
from deonarg.testkit import brute_force_extensions


def prepared_graph(text):
    theory = parse_theory(text)
    arguments = build_arguments(theory)
    return arguments, compute_attacks(arguments, theory)


def test_single_unattacked_rule_is_justified_under_every_semantics():
    arguments, graph = prepared_graph("r1: => obl(p).\n")
    # obl(p) expels the imaginary perm_w(~p); everything else stands
    expected = frozenset({"A0", "A1", "I1"})
    assert grounded_extension(graph) == expected
    assert complete_extensions(graph) == (expected,)
    assert stable_extensions(graph) == (expected,)
    conclusions = justified_conclusions(arguments, expected)
    assert {str(c) for c in conclusions} == {"obl(p)", "perm(p)", "perm_w(p)"}


def test_mutual_conflict_yields_empty_grounded_and_two_stable_extensions(two_obligations):
    graph = two_obligations.graph
    assert grounded_extension(graph) == frozenset()
    assert [sorted(e) for e in complete_extensions(graph)] == [
        [],
        ["A0", "A2", "I1"],
        ["A1", "A3", "I2"],
    ]
    assert [sorted(e) for e in stable_extensions(graph)] == [
        ["A0", "A2", "I1"],
        ["A1", "A3", "I2"],
    ]


def test_sceptical_justification_intersects_extensions(two_obligations):
    result = evaluate(two_obligations.graph, "stable")
    assert result.justified == frozenset()
    assert result.no_extensions is False


def test_grounded_extension_of_the_chained_theory(chained):
    assert sorted(grounded_extension(chained.graph)) == [
        "A0", "A5", "I1", "I10", "I2", "I7", "I8", "I9",
    ]


def test_grounded_extension_with_superiority(facultative_priorities):
    # n3 > n4 silences the attacks on the obl(c) derivation, so it survives
    assert sorted(grounded_extension(facultative_priorities.graph)) == [
        "A0", "A1", "A2", "A5", "A9", "I10", "I3", "I5", "I6", "I7", "I8", "I9",
    ]


def test_generalized_imaginary_attacks_change_the_grounded_extension(support_undercut):
    wide_graph = compute_attacks(
        support_undercut.arguments, support_undercut.theory, imaginary_subargument_attacks=True
    )
    narrow = grounded_extension(support_undercut.graph)
    wide = grounded_extension(wide_graph)
    assert narrow - wide == {"A3"}


def test_engine_matches_brute_force_oracle_on_small_goldens(two_obligations, support_undercut):
    for prepared in (two_obligations, support_undercut):
        oracle = brute_force_extensions(prepared.graph)
        assert grounded_extension(prepared.graph) == oracle.grounded
        assert complete_extensions(prepared.graph) == oracle.complete
        assert stable_extensions(prepared.graph) == oracle.stable


def test_theory_without_stable_extensions_is_flagged():
    arguments, graph = prepared_graph("r1: perm_w(p) => obl(~p).\n")
    wide = compute_attacks(arguments, imaginary_subargument_attacks=True)
    result = evaluate(wide, "stable")
    assert result.no_extensions is True
    assert result.extensions == ()
    # sceptical justification over zero extensions is vacuous
    assert result.justified == frozenset(arguments.ids)


def test_the_same_theory_has_a_stable_extension_under_narrow_attacks():
    arguments, graph = prepared_graph("r1: perm_w(p) => obl(~p).\n")
    assert [sorted(e) for e in stable_extensions(graph)] == [["A0", "A1", "I2"]]


def test_enumeration_refuses_to_run_above_the_argument_limit(chained):
    with pytest.raises(ArgumentLimitExceeded) as err:
        evaluate(chained.graph, "stable", argument_limit=3)
    assert err.value.count == 21
    assert err.value.limit == 3
    # grounded is polynomial and ignores the limit
    evaluate(chained.graph, "grounded", argument_limit=3)


def test_unknown_semantics_name_is_rejected(two_obligations):
    with pytest.raises(ValueError):
        evaluate(two_obligations.graph, "preferred")


def test_conflict_freeness_predicate(two_obligations):
    graph = two_obligations.graph
    assert is_conflict_free(graph, {"A0", "A2", "I1"})
    assert not is_conflict_free(graph, {"A0", "A1"})
    assert is_conflict_free(graph, set())


def test_admissibility_requires_defence(two_obligations):
    graph = two_obligations.graph
    assert is_admissible(graph, {"A0", "A2", "I1"})
    assert is_admissible(graph, {"A0"})  # counterattacks both its attackers
    assert not is_admissible(graph, {"I1"})  # I1 cannot answer A1 itself


def test_extensions_are_sorted_by_size_then_membership(two_obligations):
    sizes = [len(e) for e in complete_extensions(two_obligations.graph)]
    assert sizes == sorted(sizes)


def test_justified_conclusions_deduplicate_and_sort(chained):
    conclusions = justified_conclusions(chained.arguments, grounded_extension(chained.graph))
    rendered = [str(c) for c in conclusions]
    assert rendered == sorted(set(rendered), key=rendered.index)
    assert rendered[0] == "a"  # plain literals precede deontic conclusions
