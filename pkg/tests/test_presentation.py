import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heegaard_theta.errors import PresentationError, UnsupportedInput
from heegaard_theta.group_ring import GroupRingElt
from heegaard_theta.homology import AbelianGroup
from heegaard_theta.presentation import (
    BalancedPresentation,
    boundary_matrix,
    format_presentation,
    fox_derivative_abelian,
    free_reduce,
    handle_slide_cols,
    handle_slide_rows,
    parse_presentation,
    random_presentation,
    random_presentations_with_b1,
    stabilize,
    stabilized_homology,
    transport,
    word_image,
)
from heegaard_theta.selfcheck import load_fixture
from heegaard_theta.torsion import alexander_gcd, det_full, minor_det

from helpers import var, words

Z3 = AbelianGroup(3)
FREE_IMAGES = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
FOX = settings(max_examples=500, derandomize=True, deadline=None)


def fox_reference(word, j, images, group):
    """Fox derivative by splitting at the midpoint: D(uv) = D(u) + [u] D(v)."""
    if not word:
        return GroupRingElt.zero(group)
    if len(word) == 1:
        a = word[0]
        if abs(a) != j:
            return GroupRingElt.zero(group)
        if a > 0:
            return GroupRingElt.one(group)
        return -GroupRingElt.monomial(group, group.neg(images[j - 1]))
    mid = len(word) // 2
    u, v = word[:mid], word[mid:]
    return (fox_reference(u, j, images, group)
            + fox_reference(v, j, images, group).shift(word_image(u, images, group)))


# parsing

def test_parse_empty_relator():
    p = parse_presentation("genus: 1\nrelators:\n  -\n")
    assert p.genus == 1 and p.relators == ((),)


def test_parse_t3_fixture():
    p = load_fixture("t3")
    assert p.genus == 3
    assert p.relators[0] == (1, 2, -1, -2)


def test_parse_bytes_and_comments():
    p = parse_presentation(b"# hi\ngenus: 2\n\nrelators:\n  x1 x2^-1\n# mid\n  x2^+1\n")
    assert p.relators == ((1, -2), (2,))


def test_parse_balance_error():
    with pytest.raises(PresentationError, match="unbalanced"):
        parse_presentation("genus: 2\nrelators:\n  x1\n")


@pytest.mark.parametrize("text, line, column", [
    ("genus: 1\nrelators:\n  x1 y2\n", 3, 6),
    ("genus: 1\nrelators:\n  x1 x2\n", 3, 6),
    ("genus: 1\nrelators:\n  x1^2\n", 3, 3),
    ("genus: one\nrelators:\n  -\n", 1, 8),
    ("genre: 1\nrelators:\n  -\n", 1, 1),
    ("genus: 1\nwords:\n  -\n", 2, 1),
])
def test_parse_errors_report_location(text, line, column):
    with pytest.raises(PresentationError) as info:
        parse_presentation(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}" in str(info.value)


def test_parse_rejects_bad_utf8_and_empty():
    with pytest.raises(PresentationError):
        parse_presentation(b"\xff\xfe")
    with pytest.raises(PresentationError):
        parse_presentation("# only a comment\n")


def test_presentation_validation():
    with pytest.raises(PresentationError):
        BalancedPresentation(2, ((1,),))
    with pytest.raises(PresentationError):
        BalancedPresentation(1, ((2,),))
    with pytest.raises(PresentationError):
        BalancedPresentation(0, ())


@settings(max_examples=200, derandomize=True, deadline=None)
@given(st.integers(1, 4).flatmap(lambda g: st.tuples(st.just(g), st.lists(words(g), min_size=g, max_size=g))))
def test_format_parse_round_trip(data):
    g, rels = data
    p = BalancedPresentation(g, tuple(rels))
    assert parse_presentation(format_presentation(p)) == p


# Fox calculus

def test_fox_examples():
    t1 = var(Z3, 1)
    assert fox_derivative_abelian((1,), 1, FREE_IMAGES, Z3) == 1
    assert fox_derivative_abelian((-1,), 1, FREE_IMAGES, Z3) == -t1.conjugate()
    commutator = (1, 2, -1, -2)
    assert fox_derivative_abelian(commutator, 1, FREE_IMAGES, Z3) == 1 - var(Z3, 2)


@FOX
@given(words(3, 8), words(3, 8), st.integers(1, 3))
def test_fox_product_rule(u, v, j):
    d = lambda w: fox_derivative_abelian(w, j, FREE_IMAGES, Z3)
    shift = word_image(u, FREE_IMAGES, Z3)
    assert d(u + v) == d(u) + d(v).shift(shift)


@FOX
@given(words(3, 12), st.integers(1, 3))
def test_fox_matches_divide_and_conquer(w, j):
    assert fox_derivative_abelian(w, j, FREE_IMAGES, Z3) == fox_reference(w, j, FREE_IMAGES, Z3)


@FOX
@given(words(3, 6), words(3, 6), st.integers(1, 3), st.integers(-3, 3).filter(bool))
def test_fox_invariant_under_free_reduction(u, v, j, a):
    w = u + (a, -a) + v
    d = lambda x: fox_derivative_abelian(x, j, FREE_IMAGES, Z3)
    assert d(w) == d(u + v) == d(free_reduce(w))


def test_free_reduce():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert free_reduce((1, -1, 1)) == (1,)


# boundary matrix

def test_boundary_matrix_s1xs2():
    m = boundary_matrix(load_fixture("s1xs2"))
    assert m.size == 1 and m.entries[0][0] == 0
    assert m.group == AbelianGroup(1)


def test_boundary_matrix_t3():
    m = boundary_matrix(load_fixture("t3"))
    x, y, z = (var(m.group, k) for k in (1, 2, 3))
    assert m.generator_images == FREE_IMAGES
    assert m.entries == (
        (1 - y, x - 1, 0 * x),
        (0 * x, 1 - z, y - 1),
        (z - 1, 0 * x, 1 - x),
    )
    assert m.fundamental_identity_holds()


def test_generator_relator_gives_unit_row():
    p = BalancedPresentation(2, ((), (2,)))
    m = boundary_matrix(p)
    assert m.entries[1][1] == 1 and m.entries[1][0] == 0


def test_rank_zero_rejected():
    with pytest.raises(UnsupportedInput):
        boundary_matrix(load_fixture("rp3"))


# stabilization

def test_stabilize_s1xs2():
    q = stabilize(load_fixture("s1xs2"))
    assert q.genus == 2 and q.relators == ((), (2,))
    q2 = stabilize(q)
    m = boundary_matrix(q2)
    assert m.entries[1][1] == 1 and m.entries[2][2] == 1


def test_stabilize_t3_minors():
    p = load_fixture("t3")
    m = boundary_matrix(p)
    h = p.homology()
    mq = boundary_matrix(stabilize(p), stabilized_homology(h))
    assert mq.size == 4
    assert minor_det(mq, 4, 4) == det_full(m)
    for i in range(1, 4):
        for j in range(1, 4):
            assert minor_det(mq, i, j) == minor_det(m, i, j)


def test_transport_is_identity_on_shared_coordinates():
    p = load_fixture("trefoil_zero")
    h = p.homology()
    a = alexander_gcd(boundary_matrix(p))
    assert transport(a, h, h) == a


def test_transport_to_fresh_coordinates():
    for p in random_presentations_with_b1(30, 3, 10, seed=3):
        h = p.homology()
        q = stabilize(p)
        fresh = q.homology()
        for j, t in enumerate(h.images):
            moved = transport(GroupRingElt.monomial(h.group, t), h, fresh)
            assert moved == GroupRingElt.monomial(fresh.group, fresh.images[j])


# handle slides

def test_row_slide_on_zero_matrix():
    m = boundary_matrix(load_fixture("s1xs2_sum"))
    assert handle_slide_rows(m, 1, 2, 1, (0, 0)) == m


def test_row_slide_inverse():
    m = boundary_matrix(load_fixture("t3"))
    h = (1, -1, 2)
    slid = handle_slide_rows(m, 2, 3, 1, h)
    assert slid != m
    assert handle_slide_rows(slid, 2, 3, -1, h) == m


def test_column_slide_inverse():
    m = boundary_matrix(load_fixture("t3"))
    ti, tj = m.generator_images[0], m.generator_images[1]
    slid = handle_slide_cols(m, 1, 2, -1, tj)
    assert slid.generator_images[1] == Z3.add(ti, tj)
    assert slid.fundamental_identity_holds()
    # undo: the new t_j is t_i + t_j, so the reverse move uses h = t_j' - t_i
    back = handle_slide_cols(slid, 1, 2, 1, Z3.sub(slid.generator_images[1], ti))
    assert back == m


def test_slides_reject_bad_input():
    m = boundary_matrix(load_fixture("t3"))
    with pytest.raises(ValueError):
        handle_slide_rows(m, 1, 1, 1, (0, 0, 0))
    with pytest.raises(ValueError):
        handle_slide_rows(m, 1, 2, 2, (0, 0, 0))
    with pytest.raises(ValueError):
        handle_slide_cols(m, 1, 2, 1, (5, 0, 0))
    with pytest.raises(ValueError):
        handle_slide_cols(m, 2, 2, -1, m.generator_images[1])


def test_slides_keep_gcd_on_t3():
    m = boundary_matrix(load_fixture("t3"))
    a = alexander_gcd(m)
    rng = random.Random(2)
    for _ in range(20):
        i, j = rng.sample((1, 2, 3), 2)
        h = tuple(rng.randint(-2, 2) for _ in range(3))
        slid = handle_slide_rows(m, i, j, rng.choice((1, -1)), h)
        assert a.equal_up_to_unit(alexander_gcd(slid)) is not None


# random generation

def test_random_presentation_examples():
    for seed in range(5):
        assert random_presentation(1, 0, seed) == BalancedPresentation(1, ((),))
    assert random_presentation(2, 4, 7) == random_presentation(2, 4, 7)
    assert random_presentation(3, 6, 7) == random_presentation(3, 6, 7)
    p = random_presentation(2, 4, 7)
    assert p.genus == 2 and all(len(w) <= 4 for w in p.relators)


@pytest.mark.parametrize("style", ["free", "commutator", "wirtinger"])
def test_random_styles_respect_bounds(style):
    for seed in range(50):
        p = random_presentation(3, 8, seed, style)
        assert p.genus == 3
        assert all(len(w) <= 8 for w in p.relators)


def test_commutator_style_has_full_rank():
    for seed in range(30):
        assert random_presentation(3, 8, seed, "commutator").homology().group.rank == 3


def test_unknown_style():
    with pytest.raises(ValueError):
        random_presentation(2, 4, 0, "braid")
