"""Shared test helpers: acceptance tagging, sympy conversion, strategies."""

import sympy
from hypothesis import strategies as st

from heegaard_theta.group_ring import GroupRingElt
from heegaard_theta.homology import AbelianGroup


def criterion(number, title):
    """Tag an acceptance test so the terminal summary can report it."""
    def wrap(fn):
        fn.acceptance = (number, title)
        return fn
    return wrap


def gen(group, k, exponent=1):
    """Group element with ``exponent`` in coordinate ``k`` (1-based)."""
    vec = [0] * group.ngens
    vec[k - 1] = exponent
    return group.reduce(tuple(vec))


def var(group, k):
    return GroupRingElt.monomial(group, gen(group, k))


def symbols(n):
    return sympy.symbols(f"t1:{n + 1}")


def to_sympy(elt, syms=None):
    """Laurent polynomial over a free abelian group as a sympy expression."""
    group = elt.group
    assert group.is_torsion_free
    syms = syms or symbols(group.rank)
    return sum((c * sympy.Mul(*(s ** e for s, e in zip(syms, key)))
                for key, c in elt.items()), sympy.Integer(0))


def from_sympy(expr, group, syms=None):
    """Inverse of :func:`to_sympy` for Laurent polynomial expressions."""
    syms = syms or symbols(group.rank)
    expr = sympy.expand(expr)
    terms = {}
    for term in sympy.Add.make_args(expr):
        if term == 0:
            continue
        coeff, rest = term.as_coeff_Mul()
        powers = rest.as_powers_dict() if rest != 1 else {}
        key = tuple(int(powers.get(s, 0)) for s in syms)
        terms[key] = terms.get(key, 0) + int(coeff)
    return GroupRingElt(group, terms)


GROUPS = (
    AbelianGroup(1),
    AbelianGroup(2),
    AbelianGroup(1, (2,)),
    AbelianGroup(1, (3,)),
    AbelianGroup(2, (2, 4)),
)


def elements(group, max_terms=4, exp=3, coeff=4):
    """Strategy for random elements of ``Z[group]``."""
    keys = st.tuples(
        *[st.integers(-exp, exp) for _ in range(group.rank)],
        *[st.integers(0, d - 1) for d in group.invariant_factors],
    )
    return st.dictionaries(keys, st.integers(-coeff, coeff), max_size=max_terms).map(
        lambda d: GroupRingElt(group, d))


def group_elements(group, exp=3):
    return st.tuples(
        *[st.integers(-exp, exp) for _ in range(group.rank)],
        *[st.integers(0, d - 1) for d in group.invariant_factors],
    )


def random_element(rng, group, max_terms=3, exp=2, coeff=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        key = tuple(rng.randint(-exp, exp) for _ in range(group.rank)) + tuple(
            rng.randrange(d) for d in group.invariant_factors)
        terms[key] = rng.randint(-coeff, coeff)
    return GroupRingElt(group, terms)


def words(genus, max_length=8):
    letters = st.integers(1, genus).flatmap(lambda k: st.sampled_from((k, -k)))
    return st.lists(letters, max_size=max_length).map(tuple)
