from itertools import product

import pytest

from quadrings import (Congruence, FiniteCommMonoid, MonoidError, MonoidHom,
                       cancellative_elements, congruence_from_pairs,
                       find_absorbing, grothendieck_group, image_congruence,
                       is_exact, kernel_congruence, parse_ring, quotient_map,
                       quotient_monoid, submonoid, validate_monoid)
from quadrings.monoids import find_monoid_violation, require_valid_monoid


def mult_monoid(n):
    """(Z/n, *) as an explicit table."""
    return FiniteCommMonoid([str(i) for i in range(n)],
                            [[(i * j) % n for j in range(n)] for i in range(n)],
                            1)


def add_monoid(n):
    """(Z/n, +) as an explicit table."""
    return FiniteCommMonoid([str(i) for i in range(n)],
                            [[(i + j) % n for j in range(n)] for i in range(n)],
                            0)


def trivial_monoid():
    return FiniteCommMonoid(["1"], [[0]], 0)


def klein_four():
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return FiniteCommMonoid(["0", "1", "2", "3"], table, 0)


SAMPLE_MONOIDS = [mult_monoid(2), mult_monoid(4), mult_monoid(6),
                  add_monoid(2), add_monoid(3), add_monoid(6),
                  trivial_monoid(), klein_four()]


def test_validate_monoid():
    for m in SAMPLE_MONOIDS:
        assert validate_monoid(m)
    broken = FiniteCommMonoid(["e", "a"], [[0, 1], [1, 1]], 0)
    # a*a = a but table is not associative-violating; tweak to break commutativity
    broken2 = FiniteCommMonoid(["e", "a", "b"],
                               [[0, 1, 2], [1, 2, 0], [2, 1, 0]], 0)
    assert not validate_monoid(broken2)
    kind, witness = find_monoid_violation(broken2)
    assert kind in ("commutativity", "associativity")
    with pytest.raises(MonoidError):
        require_valid_monoid(broken2)
    assert validate_monoid(broken)


def test_absorbing_and_cancellative():
    m = mult_monoid(4)
    assert find_absorbing(m) == 0
    assert cancellative_elements(m) == [1, 3]
    g = add_monoid(2)
    assert find_absorbing(g) is None
    assert cancellative_elements(g) == [0, 1]
    bool_mult = FiniteCommMonoid(["0", "1"], [[0, 0], [0, 1]], 1)
    assert find_absorbing(bool_mult) == 0


def units_map_hom():
    """(Z/4, *) -> ({0,1}, *) sending units to 1."""
    source = mult_monoid(4)
    target = FiniteCommMonoid(["0", "1"], [[0, 0], [0, 1]], 1)
    return MonoidHom(source, target, [0, 1, 0, 1])


def test_kernel_congruence():
    f = units_map_hom()
    assert f.is_valid()
    k = kernel_congruence(f)
    assert sorted(map(sorted, k.classes())) == [[0, 2], [1, 3]]


def test_identity_map_congruences():
    m = mult_monoid(4)
    ident = MonoidHom(m, m, list(range(4)))
    assert kernel_congruence(ident).num_classes == 4
    # z ~ w via x=w, y=z once the whole monoid is in the image, so the image
    # congruence of any surjection collapses everything
    assert image_congruence(ident).num_classes == 1


def test_image_congruence_diagonal_for_trivial_image():
    t = trivial_monoid()
    z2 = add_monoid(2)
    inc = MonoidHom(t, z2, [0])
    assert image_congruence(inc).num_classes == 2


def test_image_congruence_with_absorbing_in_image():
    # 0 in the image forces the image congruence to be everything
    f = units_map_hom()
    i = image_congruence(f)
    assert i.num_classes == 1


def test_quotient_is_surjective_hom_with_kernel_c():
    for m in SAMPLE_MONOIDS:
        congruences = [congruence_from_pairs(m, pairs)
                       for pairs in ([], [(0, m.identity)],
                                     [(m.size - 1, m.identity)])]
        congruences.append(image_congruence(MonoidHom(m, m, list(range(m.size)))))
        for c in congruences:
            assert c.is_congruence()
            pi = quotient_map(m, c)
            assert pi.is_valid()
            assert pi.is_surjective()
            assert kernel_congruence(pi) == c
    f = units_map_hom()
    k = kernel_congruence(f)
    pi = quotient_map(f.source, k)
    assert pi.is_valid() and pi.is_surjective()
    assert kernel_congruence(pi) == k


def test_quotient_rejects_non_congruence():
    m = add_monoid(4)
    # {0,1},{2},{3} is not compatible with addition
    bad = Congruence(m, [0, 0, 1, 2])
    assert not bad.is_congruence()
    with pytest.raises(MonoidError):
        quotient_monoid(m, bad)


def test_exactness_spec_examples():
    # inclusion of a monoid with absorbing element into itself, collapsed to
    # the trivial monoid: exact because the image congruence is everything
    m = mult_monoid(2)
    f = MonoidHom(m, m, [0, 1])
    g = MonoidHom(m, trivial_monoid(), [0, 0])
    assert is_exact(f, g)

    # same shape on the actual discriminant monoid of Z/4
    from quadrings import disc_classes
    dm = disc_classes(parse_ring("Z/4")).monoid
    ident = MonoidHom(dm, dm, list(range(dm.size)))
    collapse = MonoidHom(dm, trivial_monoid(), [0] * dm.size)
    assert is_exact(ident, collapse)

    # inclusion of {0} into (Z/2, +) with the collapse map: image congruence
    # is the diagonal but the kernel congruence is everything
    t = trivial_monoid()
    z2 = add_monoid(2)
    f = MonoidHom(t, z2, [0])
    g = MonoidHom(z2, t, [0, 0])
    assert f.is_valid() and g.is_valid()
    assert not is_exact(f, g)

    # identity followed by collapse on a group is exact
    f = MonoidHom(z2, z2, [0, 1])
    assert is_exact(f, MonoidHom(z2, t, [0, 0]))


def test_exactness_not_composable():
    with pytest.raises(MonoidError):
        is_exact(MonoidHom(add_monoid(2), add_monoid(2), [0, 1]),
                 MonoidHom(add_monoid(3), trivial_monoid(), [0, 0, 0]))


def all_homs(a, b):
    for mapping in product(range(b.size), repeat=a.size):
        h = MonoidHom(a, b, list(mapping))
        if h.is_valid():
            yield h


def test_exactness_matches_group_exactness():
    # for group homomorphisms, kernel-congruence = image-congruence is the
    # classical condition im(f) = ker(g), given injective f and surjective g
    groups = [add_monoid(2), add_monoid(3), add_monoid(4), klein_four()]
    for a in groups:
        for b in groups:
            for c in groups:
                for f in all_homs(a, b):
                    if not f.is_injective():
                        continue
                    for g in all_homs(b, c):
                        if not g.is_surjective():
                            continue
                        image = set(f.mapping)
                        kernel = {x for x in range(b.size)
                                  if g.mapping[x] == c.identity}
                        assert is_exact(f, g) == (image == kernel)


def test_grothendieck_examples():
    assert grothendieck_group(mult_monoid(4)).is_trivial()
    k0 = grothendieck_group(add_monoid(3))
    assert k0.invariant_factors == [3]
    units = submonoid(mult_monoid(4), [1, 3])
    assert grothendieck_group(units).invariant_factors == [2]


def test_grothendieck_absorbing_direction():
    for m in SAMPLE_MONOIDS:
        if find_absorbing(m) is not None:
            assert grothendieck_group(m).is_trivial()


def test_grothendieck_universal_map_is_hom():
    for m in SAMPLE_MONOIDS:
        k0 = grothendieck_group(m)
        pi = MonoidHom(m, k0.monoid, k0.universal_map)
        assert pi.is_valid()


def test_grothendieck_of_group_is_itself():
    k0 = grothendieck_group(klein_four())
    assert k0.invariant_factors == [2, 2]
    assert k0.order == 4
    k0 = grothendieck_group(add_monoid(6))
    assert k0.invariant_factors == [6]


def test_submonoid_requires_closure():
    with pytest.raises(MonoidError):
        submonoid(add_monoid(4), [0, 1])


def test_json_round_trip():
    m = mult_monoid(4)
    again = FiniteCommMonoid.from_json_dict(m.to_json_dict())
    assert again == m
    data = m.to_json_dict()
    assert data["identity"] == 1
    assert data["elements"] == ["0", "1", "2", "3"]
