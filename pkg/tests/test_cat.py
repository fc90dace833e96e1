import pytest

from simpcat.cat import (BoundExceeded, CategoryError, FinCategory, Functor,
                         arrow_cat, chaotic, check_equivalence, colimit_cat,
                         coproduct_cat, cyclic_group, discrete,
                         enumerate_functors, enumerate_transformations,
                         equalizer_cat, fundamental_groupoid,
                         iso_subgroupoid, materialize_groupoid, nerve,
                         nerve_functor, product_cat, terminal_cat)
from simpcat.sset import delta, sphere


def test_builders_validate():
    for C in (discrete(range(3)), chaotic(range(3)), cyclic_group(4),
              arrow_cat(), terminal_cat(),
              product_cat(chaotic(range(2)), cyclic_group(2)),
              coproduct_cat([cyclic_group(2), terminal_cat()])[0]):
        assert C.validate() == []


def test_invalid_composition_table_is_witnessed():
    C = cyclic_group(3)
    comp = dict(C.comp)
    comp[(1, 1)] = 0   # should be 2
    broken = FinCategory(C.objects, C.morphisms, C.src, C.tgt, C.ident, comp)
    assert broken.validate() != []


def test_groupoid_recognition():
    assert cyclic_group(5).is_groupoid()
    assert chaotic(range(2)).is_groupoid()
    assert not arrow_cat().is_groupoid()


def test_iso_subgroupoid_of_arrow():
    G = iso_subgroupoid(arrow_cat())
    assert len(G.morphisms) == 2
    assert G.validate() == []


def test_nerve_sizes():
    N = nerve(cyclic_group(2), 3)
    assert [N.size(n) for n in N.degrees()] == [1, 2, 4, 8]
    assert N.audit() == []
    N = nerve(arrow_cat(), 3)
    assert [N.size(n) for n in N.degrees()] == [2, 3, 4, 5]


def test_nerve_functor_commutes():
    F = Functor(cyclic_group(2), cyclic_group(4), {"*": "*"}, {0: 0, 1: 2})
    assert F.validate() == []
    assert nerve_functor(F, 3).validate() == []


def test_functor_validate_catches_breakage():
    F = Functor(cyclic_group(2), cyclic_group(4), {"*": "*"}, {0: 0, 1: 1})
    assert F.validate() != []


def test_enumerate_functors_counts():
    assert len(enumerate_functors(cyclic_group(4), cyclic_group(2))) == 2
    assert len(enumerate_functors(cyclic_group(2), cyclic_group(4))) == 2
    assert len(enumerate_functors(chaotic(range(2)), chaotic(range(3)))) == 9
    assert len(enumerate_functors(discrete(range(2)), discrete(range(3)))) == 9
    assert len(enumerate_functors(chaotic(range(2)), discrete(range(3)))) == 3


def test_enumerate_transformations_on_chaotic():
    ident = Functor.identity(chaotic(range(2)))
    assert len(enumerate_transformations(ident, ident)) == 1


def test_fundamental_groupoid_of_interval():
    M = materialize_groupoid(fundamental_groupoid(delta(1, 3)), 1000)
    assert len(M.objects) == 2
    assert all(len(M.hom(a, b)) == 1 for a in M.objects for b in M.objects)


def test_fundamental_groupoid_of_circle_does_not_close():
    with pytest.raises(BoundExceeded):
        materialize_groupoid(fundamental_groupoid(sphere(1, 3)), 50)


def test_free_product_does_not_close():
    pt, Z2 = terminal_cat(), cyclic_group(2)
    f = Functor(pt, Z2, {"*": "*"}, {("id", "*"): 0})
    with pytest.raises(BoundExceeded):
        colimit_cat([pt, Z2, Z2], [(0, 1, f), (0, 2, f)], 100)


def test_pushout_cocones_validate():
    B = chaotic(range(2))
    A = FinCategory((0,), ((0, 0),), {(0, 0): 0}, {(0, 0): 0},
                    {0: (0, 0)}, {((0, 0), (0, 0)): (0, 0)})
    incl = Functor(A, B, {0: 0}, {(0, 0): (0, 0)})
    C = cyclic_group(2)
    f = Functor(A, C, {0: "*"}, {(0, 0): 0})
    P, cocones = colimit_cat([A, B, C], [(0, 1, incl), (0, 2, f)])
    assert P.validate() == []
    for c in cocones:
        assert c.validate() == []
    # the pushout glues a contractible groupoid onto the group, so the
    # vertex group stays Z/2
    o = cocones[2].obj_map["*"]
    assert len(P.hom(o, o)) == 2


def test_colimit_without_edges_is_a_coproduct():
    P, cocones = colimit_cat([terminal_cat(), terminal_cat()], [])
    assert len(P.objects) == 2
    assert len(cocones) == 2


def test_equalizer_of_equal_functors_is_everything():
    ident = Functor.identity(cyclic_group(3))
    E = equalizer_cat(ident, ident)
    assert len(E.morphisms) == 3
    assert E.validate() == []


def test_equalizer_needs_parallel_functors():
    with pytest.raises(CategoryError):
        equalizer_cat(Functor.identity(cyclic_group(2)),
                      Functor.identity(cyclic_group(3)))


def test_check_equivalence():
    ch = chaotic(range(2))
    collapse = Functor(ch, terminal_cat(),
                       {0: "*", 1: "*"},
                       {m: ("id", "*") for m in ch.morphisms})
    assert check_equivalence(collapse)
    two = discrete(range(2))
    fold = Functor(two, discrete(range(1)),
                   {0: 0, 1: 0},
                   {("id", 0): ("id", 0), ("id", 1): ("id", 0)})
    assert not check_equivalence(fold)
