import random

import pytest

from linquas.groupoid import LinearGroupoid
from linquas.termlang import (ELam, ERho, Lam, LDiv, NotApplicable, Prod,
                              RDiv, Rho, TermSyntaxError, UnboundVariableError,
                              Var, canonical_print, evaluate, expand_affine,
                              identity_text, parse, parse_term)


def test_parse_associative_law():
    ident = parse("(x*y)*z = x*(y*z)")
    assert ident.lhs == Prod(Prod(Var("x"), Var("y")), Var("z"))
    assert ident.rhs == Prod(Var("x"), Prod(Var("y"), Var("z")))
    assert ident.variables == ("x", "y", "z")


def test_parse_cip_form():
    ident = parse("(x*y)*rho(x) = y")
    assert ident.lhs == Prod(Prod(Var("x"), Var("y")), Rho(Var("x")))
    assert ident.rhs == Var("y")


def test_parse_unary_and_division_forms():
    assert parse_term("lam(x)") == Lam(Var("x"))
    assert parse_term("er(x*y)") == ERho(Prod(Var("x"), Var("y")))
    assert parse_term("el(x)") == ELam(Var("x"))
    assert parse_term("x\\y") == LDiv(Var("x"), Var("y"))
    assert parse_term("x/y") == RDiv(Var("x"), Var("y"))


def test_binary_operators_are_left_associative():
    assert parse_term("x*y*z") == Prod(Prod(Var("x"), Var("y")), Var("z"))
    assert parse_term("x*y\\z") == LDiv(Prod(Var("x"), Var("y")), Var("z"))


def test_juxtaposition_is_rejected():
    for bad in ("x*(y*z) = el(x)y * (x*z)", "(xy)*z = x", "x (y) = x"):
        with pytest.raises(TermSyntaxError):
            parse(bad)


def test_syntax_errors_carry_position():
    with pytest.raises(TermSyntaxError) as exc:
        parse_term("(x*y")
    assert exc.value.pos == 4
    with pytest.raises(TermSyntaxError):
        parse_term("rho x")
    with pytest.raises(TermSyntaxError):
        parse_term("foo(x)")
    with pytest.raises(TermSyntaxError):
        parse("x*y")
    with pytest.raises(TermSyntaxError):
        parse("x = y = z")
    with pytest.raises(TermSyntaxError):
        parse_term("X*y")


def test_canonical_print_examples():
    assert canonical_print(Prod(Prod(Var("x"), Var("y")), Var("z"))) == "((x*y)*z)"
    assert canonical_print(Rho(Prod(Var("y"), Var("x")))) == "rho((y*x))"
    assert canonical_print(LDiv(Var("x"), Var("x"))) == "(x\\x)"
    ident = parse("(x*y)*(y*x) = y")
    assert identity_text(ident) == "((x*y)*(y*x)) = y"


def _random_term(rng: random.Random, depth: int):
    if depth == 0 or rng.random() < 0.3:
        return Var(rng.choice("wxyz"))
    kind = rng.randrange(7)
    if kind < 3:
        return Prod(_random_term(rng, depth - 1), _random_term(rng, depth - 1))
    if kind == 3:
        return LDiv(_random_term(rng, depth - 1), _random_term(rng, depth - 1))
    if kind == 4:
        return RDiv(_random_term(rng, depth - 1), _random_term(rng, depth - 1))
    return rng.choice((Rho, Lam, ERho, ELam))(_random_term(rng, depth - 1))


def test_parse_print_roundtrip_1000_random_terms():
    rng = random.Random(1729)
    for _ in range(1000):
        term = _random_term(rng, rng.randint(1, 6))
        assert parse_term(canonical_print(term)) == term


def test_evaluate_examples():
    g = LinearGroupoid(6, 2, 4, 2)
    assert evaluate(parse_term("x*y"), {"x": 2, "y": 3}, g) == 4
    assert evaluate(parse_term("rho(x)"), {"x": 0}, LinearGroupoid(5, 2, 4, 4)) == 0
    na = evaluate(parse_term("rho(x)"), {"x": 0}, g)
    assert isinstance(na, NotApplicable) and "NonUnique" in na.reason


def test_evaluate_unbound_variable():
    with pytest.raises(UnboundVariableError):
        evaluate(parse_term("x*y"), {"x": 1}, LinearGroupoid(5, 0, 1, 1))


def test_expand_affine_examples():
    form = expand_affine(parse_term("x*(y*z)"), LinearGroupoid(9, 2, 4, 2))
    assert form.constant == 6
    assert form.coeffs == {"x": 4, "y": 8, "z": 4}
    form = expand_affine(parse_term("x"), LinearGroupoid(7, 3, 2, 5))
    assert form.constant == 0 and form.coeffs == {"x": 1}
    na = expand_affine(parse_term("rho(x)"), LinearGroupoid(6, 2, 4, 2))
    assert isinstance(na, NotApplicable) and "not a unit" in na.reason


def test_expand_affine_is_compositional():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 9)
        g = LinearGroupoid(n, rng.randrange(n), rng.randrange(n), rng.randrange(n))
        left = _random_term(rng, 2)
        right = _random_term(rng, 2)
        lf = expand_affine(left, g)
        rf = expand_affine(right, g)
        pf = expand_affine(Prod(left, right), g)
        if isinstance(lf, NotApplicable) or isinstance(rf, NotApplicable):
            assert isinstance(pf, NotApplicable)
            continue
        assert pf.constant == (g.a + g.b * lf.constant + g.c * rf.constant) % n
        names = set(lf.coeffs) | set(rf.coeffs)
        for name in names:
            want = (g.b * lf.coeffs.get(name, 0) + g.c * rf.coeffs.get(name, 0)) % n
            assert pf.coeffs.get(name, 0) == want


def test_expansion_agrees_with_direct_evaluation_on_catalog_identities():
    from itertools import product

    from linquas.catalog import catalog_entries

    rng = random.Random(31337)
    entries = [e for e in catalog_entries() if e.identity is not None]
    for _ in range(120):
        entry = rng.choice(entries)
        n = rng.randint(2, 8)
        g = LinearGroupoid(n, rng.randrange(n), rng.randrange(n), rng.randrange(n))
        names = entry.identity.variables
        for side in (entry.identity.lhs, entry.identity.rhs):
            form = expand_affine(side, g)
            if isinstance(form, NotApplicable):
                continue
            if n ** len(names) <= 2000:
                envs = product(range(n), repeat=len(names))
                envs = [dict(zip(names, values)) for values in envs]
            else:
                envs = [{name: rng.randrange(n) for name in names}
                        for _ in range(200)]
            for env in envs:
                assert evaluate(side, env, g) == form.evaluate(env)


def test_expansion_agrees_with_direct_evaluation_pointwise():
    rng = random.Random(99)
    checked = 0
    for _ in range(400):
        n = rng.randint(2, 8)
        g = LinearGroupoid(n, rng.randrange(n), rng.randrange(n), rng.randrange(n))
        term = _random_term(rng, 3)
        form = expand_affine(term, g)
        if isinstance(form, NotApplicable):
            continue
        names = sorted({v for v in canonical_print(term) if v in "wxyz"})
        for _ in range(10):
            env = {name: rng.randrange(n) for name in names}
            direct = evaluate(term, env, g)
            assert not isinstance(direct, NotApplicable)
            assert direct == form.evaluate(env)
            checked += 1
    assert checked > 1000
