import random

import pytest

from quadrings import (IDENTITY_NAMES, MultiPoly, TensorElement, verify_all,
                       verify_named_identity)
from quadrings.polynomials import variables


def test_poly_basics():
    t, n = variables("t", "n")
    assert (t + n) * (t - n) == t ** 2 - n ** 2
    assert (t - t).is_zero()
    assert MultiPoly.const(0).term_count() == 0
    assert str(t ** 2 - 4 * n) == "t^2-4*n"
    assert (t * n).vars == ("n", "t")


def test_poly_variable_pruning():
    t, n = variables("t", "n")
    p = t + n - n
    assert p.vars == ("t",)
    assert p == t


def test_poly_substitute_example():
    t, u, tp, r = variables("t", "u", "t'", "r")
    image = (t ** 2).substitute({"t": u * tp + 2 * r})
    assert image == u ** 2 * tp ** 2 + 4 * u * tp * r + 4 * r ** 2


def test_poly_substitute_self_reference():
    t, n = variables("t", "n")
    p = (t ** 2 + n).substitute({"t": t + 1})
    assert p == t ** 2 + 2 * t + 1 + n


def test_poly_evaluate():
    t, n = variables("t", "n")
    p = t ** 2 - 4 * n
    assert p.evaluate({"t": 7, "n": 3}) == 37
    assert MultiPoly.const(5).evaluate({}) == 5


def test_tensor_defining_relation():
    t, n = variables("t", "n")
    x1 = TensorElement(0, 1, 0, 0)
    assert x1 * x1 == TensorElement(-n, t, 0, 0)
    y1 = TensorElement(0, 0, 1, 0)
    assert x1 * y1 == TensorElement(0, 0, 0, 1)


def test_tensor_involution_on_basis():
    t, s = variables("t", "s")
    xy = TensorElement(0, 0, 0, 1)
    assert xy.swap_involution() == TensorElement(t * s, -s, -t, 1)
    one = TensorElement(1, 0, 0, 0)
    assert one.swap_involution() == one


def test_tensor_involution_is_ring_involution():
    rng = random.Random(11)
    t, n, s, m = variables("t", "n", "s", "m")
    gens = [MultiPoly.const(1), t, n, s, m]

    def random_elem():
        coeffs = []
        for _ in range(4):
            p = MultiPoly.const(rng.randint(-3, 3))
            p = p + rng.randint(-2, 2) * gens[rng.randrange(len(gens))]
            coeffs.append(p)
        return TensorElement(*coeffs)

    for _ in range(40):
        a, b = random_elem(), random_elem()
        assert a.swap_involution().swap_involution() == a
        assert (a * b).swap_involution() == a.swap_involution() * b.swap_involution()
        assert (a + b).swap_involution() == a.swap_involution() + b.swap_involution()


def test_tensor_associativity_random_triples():
    rng = random.Random(23)
    t, n, s, m = variables("t", "n", "s", "m")
    gens = [MultiPoly.const(1), t, n, s, m]

    def random_elem():
        return TensorElement(*[rng.randint(-2, 2) * gens[rng.randrange(len(gens))]
                               for _ in range(4)])

    for _ in range(50):
        a, b, c = random_elem(), random_elem(), random_elem()
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a


def test_fixed_element_is_fixed():
    xy = TensorElement(0, 0, 0, 1)
    z = xy + xy.swap_involution()
    assert z.swap_involution() == z


def test_all_identities_pass():
    results = verify_all()
    assert len(results) == 7
    for r in results:
        assert r.passed, r.name
    assert [r.name for r in results] == IDENTITY_NAMES


def test_unknown_identity():
    with pytest.raises(KeyError):
        verify_named_identity("no-such-law")


# Independent plain-integer oracles for each identity, evaluated at random
# points; a canonicalization bug that let a false identity slip through the
# symbolic comparison would show up here.

def _star(t, n, s, m):
    return (s * t, m * t * t + n * s * s - 4 * n * m)


def _oracle_disc_multiplicativity(v):
    t, n, s, m = v["t"], v["n"], v["s"], v["m"]
    st, norm = _star(t, n, s, m)
    return st ** 2 - 4 * norm == (t * t - 4 * n) * (s * s - 4 * m)


def _oracle_star_associativity(v):
    t, n, s, m, p, q = (v[k] for k in "tnsmpq")
    return _star(*_star(t, n, s, m), p, q) == _star(t, n, *_star(s, m, p, q))


def _oracle_change_of_basis(v):
    u, w, r, q, tp, np_, sp, mp = (v[k] for k in
                                   ("u", "v", "r", "q", "tp", "np", "sp", "mp"))
    t = u * tp + 2 * r
    n = u * u * np_ + t * r - r * r
    s = w * sp + 2 * q
    m = w * w * mp + s * q - q * q
    trace, norm = _star(tp, np_, sp, mp)
    a, b = q * t + r * s - 2 * q * r, u * w
    lhs = (a * a - norm * b * b, 2 * a * b + trace * b * b)
    st = s * t
    big = m * t * t + n * s * s - 4 * n * m
    return lhs == (st * a - big, st * b)


def _tensor_mul_int(a, b, t, n, s, m):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - n * a1 * b1 - m * a2 * b2 + n * m * a3 * b3,
        a0 * b1 + a1 * b0 + t * a1 * b1 - m * (a2 * b3 + a3 * b2) - t * m * a3 * b3,
        a0 * b2 + a2 * b0 + s * a2 * b2 - n * (a1 * b3 + a3 * b1) - n * s * a3 * b3,
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1 + t * (a1 * b3 + a3 * b1)
        + s * (a2 * b3 + a3 * b2) + t * s * a3 * b3,
    )


def _oracle_fixed_element(v):
    t, n, s, m = v["t"], v["n"], v["s"], v["m"]
    z = (t * s, -s, -t, 2)
    z2 = _tensor_mul_int(z, z, t, n, s, m)
    big = m * t * t + n * s * s - 4 * n * m
    st = s * t
    rhs = (st * z[0] - big, st * z[1], st * z[2], st * z[3])
    return z2 == rhs


def _oracle_wp_closure(v):
    r, s = v["r"], v["s"]
    c = r + s + 2 * r * s
    return c + c * c == (r + r * r) + (s + s * s) + 4 * (r + r * r) * (s + s * s)


def _oracle_as_action_norm(v):
    t, n, m = v["t"], v["n"], v["m"]
    return m * t * t + n - 4 * n * m == n + (t * t - 4 * n) * m


def _oracle_square_product(v):
    t, n, w = v["t"], v["n"], v["w"]
    st, norm = _star(t, n, t, n)
    if st != t * t or norm != 2 * n * (t * t - 2 * n):
        return False
    if st ** 2 - 4 * norm != (t * t - 4 * n) ** 2:
        return False
    wo = w + 2 * n  # the shifted generator
    return wo * wo - st * wo + norm == w * w - (t * t - 4 * n) * w


ORACLES = {
    "disc-multiplicativity": (_oracle_disc_multiplicativity, "tnsm"),
    "star-associativity": (_oracle_star_associativity, "tnsmpq"),
    "change-of-basis-functoriality": (
        _oracle_change_of_basis, ["u", "v", "r", "q", "tp", "np", "sp", "mp"]),
    "fixed-element-z-squared": (_oracle_fixed_element, "tnsm"),
    "wp-closure": (_oracle_wp_closure, "rs"),
    "as-action-norm": (_oracle_as_action_norm, "tnm"),
    "square-product": (_oracle_square_product, "tnw"),
}


def test_identities_hold_at_random_integer_points():
    rng = random.Random(2026)
    assert set(ORACLES) == set(IDENTITY_NAMES)
    for name, (oracle, names) in ORACLES.items():
        assert verify_named_identity(name).passed
        for _ in range(100):
            point = {k: rng.randint(-10 ** 6, 10 ** 6) for k in names}
            assert oracle(point), (name, point)
