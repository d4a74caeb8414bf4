import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formdiv.corpus import INTRO_EXAMPLE, corpus
from formdiv.counting import count_solutions
from formdiv.formula import (
    Atomic,
    Exists,
    Forall,
    Not,
    Or,
    Word,
    change_free_variable,
    classify_variables,
    const,
    detect_isolated,
    free,
    reduce_letters,
    rename_bound,
    substitute_bound,
)
from formdiv.generate import random_formula
from formdiv.graph import assemble_matrix
from formdiv.groups import load_group
from formdiv.parser import FormulaSyntaxError, parse_formula

x1, x2 = free("x1", 0), free("x2", 1)
a = const("a")

letters = st.lists(
    st.tuples(st.sampled_from([x1, x2, a]), st.integers(-3, 3)), max_size=12
)


@given(letters)
def test_reduction_is_idempotent(ls):
    once = reduce_letters(ls)
    assert reduce_letters(once) == once
    assert all(e != 0 for _, e in once)
    assert all(p[0] != q[0] for p, q in zip(once, once[1:]))


@given(letters, letters)
def test_word_inverse(u, v):
    u, v = Word(tuple(u)), Word(tuple(v))
    assert (u * u.inverse()).letters == ()
    assert (u * v).inverse() == v.inverse() * u.inverse()


def test_word_power_and_conjugate():
    w = Word(((x1, 1), (x2, 1)))
    assert str(w ** 2) == "x1*x2*x1*x2"
    assert str(w ** -1) == "x2^-1*x1^-1"
    assert str(Word.of(x1, 3) ** -2) == "x1^-6"
    assert str(Word.of(x1).conjugate(Word.of(a))) == "a^-1*x1*a"


def test_parse_simple_equation():
    phi = parse_formula("x1^2 * x2 = 1", ["x1", "x2"])
    assert phi.body == Atomic(Word(((x1, 2), (x2, 1))))


def test_parse_intro_example_moves_rhs():
    phi = parse_formula("x1^3*x2 = a", ["x1", "x2"])
    assert phi.body == Atomic(Word(((x1, 3), (x2, 1), (a, -1))))
    intro = parse_formula(INTRO_EXAMPLE, ["x1", "x2"])
    assert isinstance(intro.body, Or) and isinstance(intro.body.left, Not)


def test_parse_worked_example(worked):
    assert len(worked.quantifiers()) == 2
    assert len(worked.atoms()) == 3
    assert isinstance(worked.body, Forall) and isinstance(worked.body.body, Exists)
    assert str(worked.atoms()[1]) == "z^-1*b*z*x1^6*x2*z^-1*b*z"


def test_conjugation_sugar():
    phi = parse_formula("x1^x2 = x1^-x2", ["x1", "x2"])
    # x2^-1 x1 x2 (x2^-1 x1^-1 x2)^-1 = x2^-1 x1^2 x2
    assert str(phi.atoms()[0]) == "x2^-1*x1^2*x2"
    phi = parse_formula("(x1*x2)^(x1) = 1", ["x1", "x2"])
    assert str(phi.atoms()[0]) == "x2*x1"


def test_commutator_and_implication():
    phi = parse_formula("[x1,x2] = 1 -> x1 = x2", ["x1", "x2"])
    assert isinstance(phi.body, Or) and isinstance(phi.body.left, Not)
    assert str(phi.atoms()[0]) == "x1^-1*x2^-1*x1*x2"


def test_precedence():
    phi = parse_formula("x1 = 1 | x2 = 1 & !x1 = x2", ["x1", "x2"])
    assert str(phi) == "x1 = 1 | x2 = 1 & !(x1*x2^-1 = 1)"


def test_unicode_synonyms():
    phi = parse_formula("∀y ∃z (y*z = x1) ∧ ¬(x1 = 1)", ["x1"])
    assert str(phi) == "forall y (exists z (y*z*x1^-1 = 1 & !(x1 = 1)))"


@pytest.mark.parametrize(
    "text, message",
    [
        ("x1 = ", "expected a group element"),
        ("x1 == 1", "expected a group element"),
        ("x1 = 1 )", "trailing"),
        ("x1 = 2", "only the integer 1"),
        ("x1 # 1", "unexpected character"),
        ("forall x1 (x1 = 1)", "shadows free variable"),
        ("forall y (y = 1) | y = 1", None),
    ],
)
def test_syntax_errors(text, message):
    if message is None:
        # quantifier prefix scopes over the whole disjunction
        assert parse_formula(text, ["x1"]).bound_variables()[0].name == "y"
        return
    with pytest.raises(FormulaSyntaxError, match=message):
        parse_formula(text, ["x1"])


def test_syntax_error_position():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("x1 * * x1 = 1", ["x1"])
    assert info.value.pos == 5


def test_declared_constants():
    parse_formula("x1 = a", ["x1"], constants=["a"])
    with pytest.raises(FormulaSyntaxError, match="undeclared identifier 'b'"):
        parse_formula("x1 = b", ["x1"], constants=["a"])
    with pytest.raises(FormulaSyntaxError, match="shadows constant"):
        parse_formula("forall a (x1 = a)", ["x1"], constants=["a"])
    with pytest.raises(FormulaSyntaxError, match="outside the scope"):
        parse_formula("x1 = y & forall y (y = 1)", ["x1"])


def test_sentences_rejected():
    with pytest.raises(ValueError):
        parse_formula("forall y (y = 1)", [])


def test_alpha_renaming():
    phi = parse_formula("x1 = 1 & forall y (y = x1) & exists y (y^2 = x1) & forall y forall y (y = 1)", ["x1"])
    names = [v.name for v in phi.bound_variables()]
    assert len(set(names)) == 4
    assert names[0] == "y"
    # the inner of two nested binders of y captures the occurrence
    inner = phi.quantifiers()[-1]
    assert str(inner.body.word) == inner.var.name


def test_roundtrip_corpus():
    for phi in corpus():
        again = parse_formula(str(phi), phi.signature, phi.constants)
        assert again == phi
        assert str(again) == str(phi)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_roundtrip_random(seed):
    phi = random_formula(seed)
    assert parse_formula(str(phi), phi.signature, phi.constants) == phi


def test_classify_variables(worked):
    assert classify_variables(worked) == ({"x1", "x2"}, {"y", "z"})
    assert classify_variables(parse_formula("forall y (x1 = 1)", ["x1", "x2"])) == ({"x1"}, {"y"})
    assert classify_variables(parse_formula("x1 = x2", ["x1", "x2"]))[1] == set()


def test_detect_isolated_examples(worked):
    sub = parse_formula("exists z (b^z*x1^6*x2*b^z = 1)", ["x1", "x2"])
    iso = detect_isolated(sub)
    assert iso.isolating == {"z"} and iso.isolated == {"b"} and iso.non_isolated == set()

    iso = detect_isolated(worked)
    assert "a" in iso.non_isolated and "y" not in iso.isolating
    assert iso.isolating == {"z"} and iso.isolated == {"b"}

    mixed = parse_formula("exists t (g^t = x1 & t = x1)", ["x1"])
    iso = detect_isolated(mixed)
    assert iso.isolating == set() and iso.non_isolated == {"g"}


def test_detect_isolated_strict_pattern():
    # t^-2 g t^2 is not the literal pattern
    iso = detect_isolated(parse_formula("exists t (t^-2*g*t^2 = x1)", ["x1"]))
    assert iso.isolating == set() and iso.non_isolated == {"g"}
    # several constants inside one conjugation still count
    iso = detect_isolated(parse_formula("exists t ((g*h)^t = x1)", ["x1"]))
    assert iso.isolating == {"t"} and iso.isolated == {"g", "h"}
    # an occurrence of g outside the pattern makes g non-isolated
    iso = detect_isolated(parse_formula("exists t (g^t = x1*g)", ["x1"]))
    assert iso.isolating == {"t"} and iso.isolated == set() and iso.non_isolated == {"g"}


def test_detect_isolated_invariant_under_renaming():
    for phi in corpus():
        names = {v.name: f"{v.name}_r" for v in phi.bound_variables()}
        before, after = detect_isolated(phi), detect_isolated(rename_bound(phi, names))
        assert {names[t] for t in before.isolating} == after.isolating
        assert before.isolated == after.isolated and before.non_isolated == after.non_isolated


def test_substitute_bound_conjugate(S3):
    phi = parse_formula("forall y (y = x1)", ["x1"])
    psi = substitute_bound(phi, "y", "conjugate", "c")
    assert str(psi.atoms()[0]) == "c^-1*y*c*x1^-1"
    for c in range(6):
        assert count_solutions(phi, S3, {"c": c}) == count_solutions(psi, S3, {"c": c})


def test_substitute_bound_identity_constant_changes_nothing_semantically(S3):
    phi = parse_formula("exists y (y^2 = x1)", ["x1"])
    psi = substitute_bound(phi, "y", "right", "c")
    assert str(psi.atoms()[0]) == "y*c*y*c*x1^-1"
    assert count_solutions(psi, S3, {"c": S3.identity}) == count_solutions(phi, S3, {})


def test_substitute_bound_worked_example(S3, worked):
    psi = substitute_bound(worked, "z", "right", "c")
    for av, bv, cv in itertools.product(range(6), repeat=3):
        binding = {"a": av, "b": bv, "c": cv}
        assert count_solutions(worked, S3, binding) == count_solutions(psi, S3, binding)


def test_substitute_bound_errors(worked):
    with pytest.raises(ValueError, match="not a bound variable"):
        substitute_bound(worked, "x1", "right", "c")
    with pytest.raises(ValueError, match="mode"):
        substitute_bound(worked, "y", "left", "c")


def test_change_free_variable_intro_matrix():
    phi = parse_formula(INTRO_EXAMPLE, ["x1", "x2"])
    assert change_free_variable(phi, 0, 1, 0) == phi
    psi = change_free_variable(phi, 0, 1, 1)
    assert assemble_matrix(psi).rows == ((3, 4), (1, 4))
    with pytest.raises(ValueError):
        change_free_variable(phi, 1, 1, 2)


def test_change_free_variable_preserves_counts(S3, worked):
    for k in range(-3, 4):
        for i, j in [(0, 1), (1, 0)]:
            psi = change_free_variable(worked, i, j, k)
            for binding in [{"a": 0, "b": 0}, {"a": 1, "b": 3}, {"a": 5, "b": 2}]:
                assert count_solutions(psi, S3, binding) == count_solutions(worked, S3, binding)
