import random

import pytest

from oracles import abelian_hom_count, random_cone
from seifert4.errors import ResourceGuardExceeded
from seifert4.quotients import (
    CatalogError,
    FiniteGroup,
    QuotientSpectrum,
    abelianization,
    census,
    direct_product,
    hom_count,
    hom_count_backtrack,
    hom_count_seifert,
    load_catalog,
    parse_catalog,
    parse_cycles,
)
from seifert4.seifert import GroupPresentation, SeifertData, presentation

Q = [[0, 1], [-1, 0]]
Q6 = [[1, 1], [-1, 0]]
I = [[1, 0], [0, 1]]


def group(text):
    return parse_catalog(text)[0]


def cyclic(n):
    return FiniteGroup(f"Z{n}", n, (tuple((i + 1) % n for i in range(n)),))


S3 = None


def setup_module():
    global S3
    S3 = group("group S3 6 degree 3\ngen (1 2)\ngen (1 2 3)\n")


def surface(g):
    gens = []
    word = []
    for j in range(g):
        gens += [f"a{j}", f"b{j}"]
        word += [(2 * j, 1), (2 * j + 1, 1), (2 * j, -1), (2 * j + 1, -1)]
    return GroupPresentation(tuple(gens), (tuple(word),))


def z2():
    return GroupPresentation(("a", "b"), (((0, 1), (1, 1), (0, -1), (1, -1)),))


def test_catalog_loading():
    cat = {G.id: G for G in load_catalog()}
    assert cat["S3"].order == 6 and cat["Q8"].order == 8
    assert cat["Heis27"].order == 27 and cat["Z7:Z3"].order == 21 and cat["F20"].order == 20
    assert cat["Z25"].order == 25 and cat["D10"].order == 10
    # Q8 has a unique involution
    mul, _, _ = cat["Q8"].tables()
    assert sum(1 for x in range(1, 8) if mul[x][x] == 0) == 1


@pytest.mark.parametrize(
    "text",
    [
        "group X 2 degree 3\ngen (1 2 2)\n",
        "group X 2 degree 3\ngen (1 4)\n",
        "group X 2 degree 3\ngen 1 2\n",
        "gen (1 2)\n",
        "group X 3 degree 3\ngen (1 2)\n",
        "group X\n",
        "groups X 2 degree 2\n",
    ],
)
def test_malformed_catalogs(text):
    with pytest.raises(CatalogError):
        parse_catalog(text)


def test_parse_cycles_and_comments():
    assert parse_cycles("(1 2)(3 4 5)", 5) == (1, 0, 3, 4, 2)
    assert parse_cycles("()", 2) == (0, 1)
    groups = parse_catalog("# c\ngroup A 2 degree 2  # trailing\ngen (1 2)\n\ngroup B 1 degree 1\ngen ()\n")
    assert [G.id for G in groups] == ["A", "B"]


def test_degree_guard():
    with pytest.raises(CatalogError):
        FiniteGroup("big", 40, (tuple(range(40)),))


def test_element_guard():
    with pytest.raises(ResourceGuardExceeded):
        load_catalog_text = "group S8 40320 degree 8\ngen (1 2)\ngen (1 2 3 4 5 6 7 8)\n"
        parse_catalog(load_catalog_text)


def test_abelianization_examples(hempel_pair):
    assert abelianization(surface(2)) == (0, 0, 0, 0)
    assert abelianization(GroupPresentation(("x",), (((0, 5),),))) == (5,)
    assert abelianization(presentation(hempel_pair[0])) == (0,) * 6


def test_hom_count_examples():
    trivial = FiniteGroup("Z1", 1, ((0,),))
    assert hom_count(surface(2), trivial) == 1
    for n in (2, 3, 5, 6):
        assert hom_count(z2(), cyclic(n)) == n * n
    assert hom_count(surface(2), cyclic(2)) == 16


def test_hom_count_guards():
    with pytest.raises(ResourceGuardExceeded):
        hom_count_backtrack(surface(2), S3, node_limit=10)
    big = FiniteGroup("Z31", 31, (tuple((i + 1) % 31 for i in range(31)),))
    assert hom_count(z2(), big) == 31 * 31
    with pytest.raises(ValueError):
        hom_count(z2(), direct_product(cyclic(11), cyclic(10)))


def test_multiplicative_on_products():
    p = surface(1)
    for G1, G2 in [(cyclic(2), S3), (cyclic(3), cyclic(2)), (S3, cyclic(3))]:
        prod = direct_product(G1, G2)
        assert prod.order == G1.order * G2.order
        assert hom_count(p, prod) == hom_count(p, G1) * hom_count(p, G2)


def small_seifert(rng, twisted=False):
    genus = rng.choice([0, 1]) if not twisted else 1
    r = rng.randint(1 if genus else 2, 3)
    cones = [random_cone(rng, rng.choice([2, 3, 4]), 1) for _ in range(r)]
    ob = (rng.randint(-2, 2), rng.randint(-2, 2))
    mono = None
    if twisted:
        A = rng.choice([Q, Q6, [[-1, 0], [0, -1]]])
        mono = [A, I] if rng.random() < 0.5 else [I, A]
    return SeifertData.make(genus, cones, ob, mono)


def test_abelian_counts_follow_abelianization():
    rng = random.Random(4)
    for _ in range(15):
        data = small_seifert(rng)
        p = presentation(data)
        ab = abelianization(p)
        for orders in ([2], [3], [4], [2, 2], [2, 6]):
            G = cyclic(orders[0])
            for n in orders[1:]:
                G = direct_product(G, cyclic(n))
            assert hom_count(p, G) == abelian_hom_count(ab, orders)


@pytest.mark.parametrize("twisted", [False, True])
def test_structured_count_matches_backtracking(twisted):
    rng = random.Random(17 + twisted)
    targets = [cyclic(2), cyclic(4), S3, group("group Q8 8 degree 8\ngen (1 2 4 7)(3 6 8 5)\ngen (1 3 4 8)(2 5 7 6)\n")]
    for _ in range(6):
        data = small_seifert(rng, twisted)
        p = presentation(data)
        plain = GroupPresentation(p.generators, p.relators)
        for G in targets:
            assert hom_count_seifert(data, G) == hom_count_backtrack(plain, G)


def test_census_deterministic_and_empty(hempel_pair):
    p = presentation(hempel_pair[0])
    assert census(p, []) == QuotientSpectrum(())
    cat = load_catalog()[:12]
    a, b = census(p, cat), census(p, cat)
    assert a == b and all(c >= 1 for _, c in a.entries)


def test_census_marks_overflow(monkeypatch):
    import seifert4.quotients as quotients

    monkeypatch.setattr(quotients, "NODE_LIMIT", 50)
    spec = census(surface(2), [cyclic(2), S3])
    assert spec.entries == (("Z2", 16), ("S3", None))
    assert spec.to_json() == [["Z2", 16], ["S3", "overflow"]]
