"""Unit tests for argument construction and the argument set."""

from deonarg import (
    DAxiomArgument,
    FactArgument,
    ImaginaryArgument,
    RuleApplication,
    build_arguments,
    lit,
    obl,
    parse_theory,
    perm,
    perm_w,
)


def kinds(prepared):
    return {i: type(a).__name__ for i, a in prepared.arguments}


def test_two_obligation_theory_builds_exactly_six_arguments(two_obligations):
    listing = [
        (i, str(a.conclusion), a.top_rule, list(two_obligations.arguments.sub_ids(i)))
        for i, a in two_obligations.arguments
    ]
    assert listing == [
        ("A0", "obl(a)", "r1", ["A0"]),
        ("A1", "obl(~a)", "r2", ["A1"]),
        ("A2", "perm(a)", "r1", ["A0", "A2"]),
        ("A3", "perm(~a)", "r2", ["A1", "A3"]),
        ("I1", "perm_w(a)", None, ["I1"]),
        ("I2", "perm_w(~a)", None, ["I2"]),
    ]


def test_imaginary_arguments_cover_both_polarities_of_every_atom(goldens):
    for prepared in goldens.values():
        imaginary = {
            prepared.arguments.argument(i).conclusion for i in prepared.arguments.imaginary_ids()
        }
        expected = {perm_w(literal) for literal in prepared.theory.literal_universe}
        assert imaginary == expected


def test_every_obligation_argument_spawns_a_permission_argument(goldens):
    for prepared in goldens.values():
        for identifier, argument in prepared.arguments:
            conclusion = argument.conclusion
            if str(conclusion).startswith("obl("):
                derived = perm(conclusion.literal)
                partners = [
                    j
                    for j in prepared.arguments.concluders(derived)
                    if isinstance(prepared.arguments.argument(j), DAxiomArgument)
                    and prepared.arguments.argument(j).base == argument
                ]
                assert len(partners) == 1
                partner = prepared.arguments.argument(partners[0])
                assert partner.top_rule == argument.top_rule


def test_rule_bodies_may_be_satisfied_by_imaginary_arguments(chained):
    a5 = chained.arguments.argument("A5")
    assert isinstance(a5, RuleApplication)
    assert str(a5.conclusion) == "s"
    assert list(chained.arguments.sub_ids("A5")) == ["A0", "A5", "I3"]
    assert any(isinstance(c, ImaginaryArgument) for c in a5.children)


def test_chained_rule_arguments_nest_their_premises(chained):
    assert list(chained.arguments.sub_ids("A10")) == ["A1", "A4", "A9", "A10"]
    a10 = chained.arguments.argument("A10")
    assert a10.height == 3


def test_rule_labels_never_repeat_on_a_root_to_leaf_path():
    theory = parse_theory("fact p.\nr1: p => q.\nr2: q => p.\n")
    arguments = build_arguments(theory)

    def path_labels_unique(argument, seen):
        if isinstance(argument, RuleApplication):
            if argument.rule.label in seen:
                return False
            seen = seen | {argument.rule.label}
        return all(path_labels_unique(child, seen) for child in argument.children)

    naturals = [arguments.argument(i) for i in arguments.natural_ids()]
    assert all(path_labels_unique(a, frozenset()) for a in naturals)
    # fact p, r1 over it, r2 over that; a second r1 application would repeat r1
    assert len(naturals) == 3


def test_self_referential_rule_applies_once():
    theory = parse_theory("fact p.\nr1: p => p.\n")
    arguments = build_arguments(theory)
    conclusions = [str(arguments.argument(i).conclusion) for i in arguments.natural_ids()]
    assert conclusions == ["p", "p"]


def test_rules_with_underivable_bodies_produce_no_arguments():
    theory = parse_theory("r1: q => p.\n")
    arguments = build_arguments(theory)
    assert arguments.natural_ids() == ()
    assert len(arguments.imaginary_ids()) == 4


def test_facts_build_leaf_arguments(facultative_priorities):
    for identifier in ("A0", "A1", "A2"):
        argument = facultative_priorities.arguments.argument(identifier)
        assert isinstance(argument, FactArgument)
        assert argument.height == 0
        assert facultative_priorities.arguments.sub_ids(identifier) == (identifier,)


def test_sub_ids_are_index_ordered_and_include_self(goldens):
    for prepared in goldens.values():
        for identifier, _ in prepared.arguments:
            subs = prepared.arguments.sub_ids(identifier)
            assert identifier in subs
            positions = [prepared.arguments.index(s) for s in subs]
            assert positions == sorted(positions)
            assert set(prepared.arguments.proper_sub_ids(identifier)) == set(subs) - {identifier}


def test_id_lookup_round_trips(chained):
    for identifier, argument in chained.arguments:
        assert chained.arguments.id_of(argument) == identifier
        assert chained.arguments.argument(identifier) is argument


def test_concluders_group_arguments_by_conclusion(two_obligations):
    arguments = two_obligations.arguments
    assert arguments.concluders(obl(lit("a"))) == ("A0",)
    assert arguments.concluders(perm_w(lit("~a"))) == ("I2",)
    assert arguments.concluders(lit("zz")) == ()


def test_construction_is_deterministic_across_repeated_builds(chained):
    rebuilt = build_arguments(parse_theory(chained.text))
    assert rebuilt.ids == chained.arguments.ids
    assert [str(rebuilt.argument(i).conclusion) for i in rebuilt.ids] == [
        str(chained.arguments.argument(i).conclusion) for i in chained.arguments.ids
    ]
