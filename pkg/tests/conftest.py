import itertools

import pytest

from formdiv.corpus import WORKED_EXAMPLE
from formdiv.counting import BACKENDS
from formdiv.formula import And, Atomic, Exists, Forall, Not, Or
from formdiv.groups import load_group
from formdiv.parser import parse_formula

ACCEPTANCE_LINES = []


def naive_value(word, G, env):
    acc = G.identity
    for sym, e in word.letters:
        acc = G.mult[acc][G.power(env[sym.name], e)]
    return acc


def naive_holds(node, G, env):
    """Direct recursion over the AST; shares nothing with the compiled kernels."""
    if isinstance(node, Atomic):
        return naive_value(node.word, G, env) == G.identity
    if isinstance(node, Not):
        return not naive_holds(node.body, G, env)
    if isinstance(node, And):
        return naive_holds(node.left, G, env) and naive_holds(node.right, G, env)
    if isinstance(node, Or):
        return naive_holds(node.left, G, env) or naive_holds(node.right, G, env)
    results = (naive_holds(node.body, G, {**env, node.var.name: g}) for g in range(G.order))
    return all(results) if isinstance(node, Forall) else any(results)


def naive_count(phi, G, binding):
    total = 0
    for xs in itertools.product(range(G.order), repeat=phi.m):
        env = dict(binding)
        env.update(zip(phi.signature, xs))
        total += naive_holds(phi.body, G, env)
    return total


@pytest.fixture(scope="session")
def S3():
    return load_group("S3")


@pytest.fixture(scope="session")
def worked():
    return parse_formula(WORKED_EXAMPLE, ["x1", "x2"])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
