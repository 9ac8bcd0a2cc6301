import itertools

import numpy as np
import pytest

from linquas.groupoid import (LinearGroupoid, ModulusMismatchError, apply,
                              cayley_table, is_latin_square, is_quasigroup,
                              left_divide, left_inverse, local_left_identity,
                              local_right_identity, op_tables, orthogonal,
                              orthogonal_det, right_divide, right_inverse)


def _all_triples(n):
    return itertools.product(range(n), repeat=3)


def test_apply_examples():
    assert apply(LinearGroupoid(6, 2, 4, 2), 2, 3) == 4
    for n in (3, 5, 8):
        proj = LinearGroupoid(n, 0, 1, 0)
        assert all(apply(proj, x, y) == x for x in range(n) for y in range(n))
    assert apply(LinearGroupoid(5, 3, 2, 4), 1, 2) == 3


def test_coefficients_reduced_and_modulus_validated():
    g = LinearGroupoid(6, -1, 7, 14)
    assert (g.a, g.b, g.c) == (5, 1, 2)
    with pytest.raises(ValueError):
        LinearGroupoid(1, 0, 0, 0)


def test_is_quasigroup_examples():
    assert is_quasigroup(LinearGroupoid(6, 2, 5, 1))
    assert not is_quasigroup(LinearGroupoid(6, 2, 4, 2))
    for a, b, c in itertools.product(range(7), range(1, 7), range(1, 7)):
        assert is_quasigroup(LinearGroupoid(7, a, b, c))


def test_cayley_table_examples():
    add3 = cayley_table(LinearGroupoid(3, 0, 1, 1))
    assert add3.cells == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert cayley_table(LinearGroupoid(2, 1, 1, 1)).cells == ((1, 0), (0, 1))
    t = cayley_table(LinearGroupoid(6, 1, 5, 5))
    for row in t.as_array():
        assert sorted(row) == list(range(6))
    for col in t.as_array().T:
        assert sorted(col) == list(range(6))


def test_is_latin_square_examples():
    assert is_latin_square(cayley_table(LinearGroupoid(6, 1, 5, 1)))
    assert not is_latin_square(cayley_table(LinearGroupoid(6, 2, 4, 2)))
    assert is_latin_square(cayley_table(LinearGroupoid(5, 3, 2, 4)))


def test_quasigroup_iff_latin_square_small():
    for n in range(2, 7):
        for a, b, c in _all_triples(n):
            g = LinearGroupoid(n, a, b, c)
            assert is_quasigroup(g) == is_latin_square(cayley_table(g)), g


def test_local_right_identity_examples():
    g = LinearGroupoid(5, 2, 4, 4)
    for x in range(5):
        e = local_right_identity(g, x)
        assert e.defined and e.value == (3 * x + 2) % 5
    assert local_right_identity(g, 0).value == 2
    for n in (4, 7):
        plain = LinearGroupoid(n, 0, 1, 1)
        assert all(local_right_identity(plain, x).value == 0 for x in range(n))
    # (4,0,1,2) at x=1 asks 2e = 0 mod 4: two solutions, so NonUnique
    ambiguous = local_right_identity(LinearGroupoid(4, 0, 1, 2), 1)
    assert not ambiguous.defined and ambiguous.reason == "NonUnique"
    # (4,0,0,2) at x=1 asks 2e = 1 mod 4: no solution at all
    missing = local_right_identity(LinearGroupoid(4, 0, 0, 2), 1)
    assert not missing.defined and missing.reason == "NoSolution"


def test_right_inverse_examples():
    g = LinearGroupoid(5, 2, 4, 4)
    assert [right_inverse(g, x).value for x in range(5)] == list(range(5))
    plain = LinearGroupoid(7, 0, 1, 1)
    assert all(right_inverse(plain, x).value == (-x) % 7 for x in range(7))
    nonuniq = right_inverse(LinearGroupoid(6, 2, 4, 2), 0)
    assert not nonuniq.defined and nonuniq.reason == "NonUnique"


def test_divide_examples():
    assert left_divide(LinearGroupoid(6, 1, 5, 1), 2, 3).value == 4
    plain = LinearGroupoid(9, 0, 1, 1)
    for x in range(9):
        for z in range(9):
            assert left_divide(plain, x, z).value == (z - x) % 9
    assert not left_divide(LinearGroupoid(6, 2, 4, 2), 0, 1).defined


def test_local_elements_consistent_where_defined():
    for n in range(2, 11):
        for a, b, c in _all_triples(n):
            g = LinearGroupoid(n, a, b, c)
            for x in range(n):
                e_r = local_right_identity(g, x)
                if e_r.defined:
                    assert apply(g, x, e_r.value) == x
                    inv = right_inverse(g, x)
                    if inv.defined:
                        assert apply(g, x, inv.value) == e_r.value
                e_l = local_left_identity(g, x)
                if e_l.defined:
                    assert apply(g, e_l.value, x) == x
                    inv = left_inverse(g, x)
                    if inv.defined:
                        assert apply(g, inv.value, x) == e_l.value


def test_quasigroup_has_all_local_elements():
    for n in range(2, 11):
        for a, b, c in _all_triples(n):
            g = LinearGroupoid(n, a, b, c)
            if not is_quasigroup(g):
                continue
            for x in range(n):
                assert local_right_identity(g, x).defined
                assert local_left_identity(g, x).defined
                assert right_inverse(g, x).defined
                assert left_inverse(g, x).defined
                assert left_divide(g, x, (x + 1) % n).defined
                assert right_divide(g, (x + 1) % n, x).defined


def test_divisions_invert_apply_where_defined():
    for n in range(2, 8):
        for a, b, c in _all_triples(n):
            g = LinearGroupoid(n, a, b, c)
            for x in range(n):
                for z in range(n):
                    w = left_divide(g, x, z)
                    if w.defined:
                        assert apply(g, x, w.value) == z
                    w = right_divide(g, z, x)
                    if w.defined:
                        assert apply(g, w.value, x) == z


def test_self_division_gives_local_identities():
    for n in range(2, 10):
        for a, b, c in _all_triples(n):
            g = LinearGroupoid(n, a, b, c)
            for x in range(n):
                ld, er = left_divide(g, x, x), local_right_identity(g, x)
                assert (ld.defined, ld.value) == (er.defined, er.value)
                rd, el = right_divide(g, x, x), local_left_identity(g, x)
                assert (rd.defined, rd.value) == (el.defined, el.value)


def test_orthogonal_examples():
    assert orthogonal(LinearGroupoid(5, 0, 1, 2), LinearGroupoid(5, 0, 2, 1))
    g = LinearGroupoid(4, 1, 1, 3)
    assert not orthogonal(g, g)
    assert not orthogonal(LinearGroupoid(4, 0, 1, 1), LinearGroupoid(4, 0, 1, 3))
    with pytest.raises(ModulusMismatchError):
        orthogonal(LinearGroupoid(4, 0, 1, 1), LinearGroupoid(5, 0, 1, 1))


def test_orthogonal_det_matches_enumeration_small():
    for n in range(2, 5):
        triples = [t for t in _all_triples(n)
                   if is_quasigroup(LinearGroupoid(n, *t))]
        for t1 in triples:
            for t2 in triples:
                g1, g2 = LinearGroupoid(n, *t1), LinearGroupoid(n, *t2)
                assert orthogonal(g1, g2) == orthogonal_det(g1, g2), (n, t1, t2)


def test_op_tables_match_scalar_operations():
    for triple in [(6, 2, 4, 2), (5, 2, 4, 4), (8, 3, 3, 3), (9, 0, 5, 2)]:
        g = LinearGroupoid(*triple)
        t = op_tables(g.triple())
        n = g.n
        for x in range(n):
            erho = local_right_identity(g, x)
            assert t.e_rho[x] == (erho.value if erho.defined else -1)
            rho = right_inverse(g, x)
            assert t.rho[x] == (rho.value if rho.defined else -1)
            lam = left_inverse(g, x)
            assert t.lam[x] == (lam.value if lam.defined else -1)
            for y in range(n):
                assert t.mul[x, y] == apply(g, x, y)
                ld = left_divide(g, x, y)
                assert t.ldiv[x, y] == (ld.value if ld.defined else -1)
                rd = right_divide(g, y, x)
                assert t.rdiv[x, y] == (rd.value if rd.defined else -1)
        assert isinstance(t.mul, np.ndarray)
