"""Minors of the boundary matrix and the normalized Alexander polynomial."""

from dataclasses import dataclass
from itertools import permutations

from .errors import NormalizationError, UnsupportedInput
from .group_ring import GroupRingElt
from .laurent import laurent_gcd_many, symmetrize


def _determinant(rows, group):
    """Laplace expansion along the first row, memoized on column subsets."""
    n = len(rows)
    one = GroupRingElt.one(group)
    if n == 0:
        return one
    memo = {}

    def expand(r, mask):
        if r == n:
            return one
        hit = memo.get(mask)
        if hit is not None:
            return hit
        total = GroupRingElt.zero(group)
        sign = 1
        for c in range(n):
            if not mask >> c & 1:
                continue
            entry = rows[r][c]
            if entry:
                sub = expand(r + 1, mask & ~(1 << c))
                if sub:
                    prod = entry * sub
                    total = total + prod if sign > 0 else total - prod
            sign = -sign
        memo[mask] = total
        return total

    return expand(0, (1 << n) - 1)


def permutation_determinant(rows, group):
    """``sum over sigma of sign(sigma) * prod_i rows[i][sigma(i)]`` (for cross-checks)."""
    n = len(rows)
    total = GroupRingElt.zero(group)
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        prod = GroupRingElt.one(group)
        for i, j in enumerate(perm):
            prod = prod * rows[i][j]
            if not prod:
                break
        total = total + (prod if inversions % 2 == 0 else -prod)
    return total


def determinant(rows, group):
    return _determinant([list(r) for r in rows], group)


def minor_det(m, i, j):
    """Determinant of ``m`` with row ``i`` and column ``j`` deleted (1-based)."""
    g = m.size
    if not (1 <= i <= g and 1 <= j <= g):
        raise IndexError(f"minor ({i}, {j}) out of range for a {g}x{g} matrix")
    rows = [[e for c, e in enumerate(row) if c != j - 1]
            for r, row in enumerate(m.entries) if r != i - 1]
    return _determinant(rows, m.group)


def det_full(m):
    return _determinant([list(r) for r in m.entries], m.group)


def all_minors(m):
    g = m.size
    return [[minor_det(m, i, j) for j in range(1, g + 1)] for i in range(1, g + 1)]


def all_projected_minors(m):
    """Grid of minors pushed down to ``Z[H / Tors]``."""
    if m.group.rank < 1:
        raise UnsupportedInput("b1 = 0: the first Betti number must be positive")
    return [[d.project_free() for d in row] for row in all_minors(m)]


def epsilon_sign(g):
    """``(-1)^(g(g-1)/2)``, the sign relating intersection counts and minors."""
    return -1 if (g * (g - 1) // 2) % 2 else 1


@dataclass(frozen=True)
class AlexanderResult:
    polynomial: GroupRingElt
    sign_ambiguity: bool
    translation_pinned: bool
    tors_order: int
    epsilon: int = 1

    @property
    def rank(self):
        return self.polynomial.group.rank


def alexander_gcd(m, minors=None):
    """gcd of all projected minors, before any normalization."""
    grid = minors if minors is not None else all_projected_minors(m)
    return laurent_gcd_many(d for row in grid for d in row)


def _canonical_sign(p):
    if p and p.terms[max(p.terms)] < 0:
        return -p
    return p


def alexander(m, minors=None):
    """Symmetrized, normalized Alexander polynomial.

    For ``b1 = 1`` the sign is fixed by ``A(1) = |Tors|`` and a
    :class:`NormalizationError` is raised when ``|A(1)| != |Tors|``.  For
    ``b1 > 1`` the sign stays ambiguous; the representative returned has a
    positive lexicographically-last coefficient.
    """
    raw = alexander_gcd(m, minors)
    rep, pinned = symmetrize(raw)
    tors = m.group.torsion_order
    if m.group.rank == 1:
        aug = rep.augment()
        if abs(aug) != tors:
            raise NormalizationError(
                f"|A(1)| = {abs(aug)} but |Tors H1| = {tors}; not a closed 3-manifold presentation?")
        if aug < 0:
            rep = -rep
        return AlexanderResult(rep, False, pinned, tors, epsilon_sign(m.size))
    return AlexanderResult(_canonical_sign(rep), True, pinned, tors, epsilon_sign(m.size))
