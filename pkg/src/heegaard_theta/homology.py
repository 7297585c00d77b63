"""Integer Smith normal form and first homology of a presentation.

Matrices are plain lists of lists of Python ints, so arithmetic is
arbitrary precision throughout.  The relator/generator convention is:
row ``i`` of an exponent matrix is relator ``i``, column ``j`` counts the
exponent sum of generator ``x_j`` in it, and ``H_1`` is the quotient of
``Z^g`` (row vectors) by the row space.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .errors import UnsupportedInput

GroupElement = tuple  # (free coordinates..., torsion residues...)


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def determinant(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, target, source, q):
    # row_target += q * row_source
    src = m[source]
    m[target] = [x + q * y for x, y in zip(m[target], src)]


def _add_col(m, target, source, q):
    for row in m:
        row[target] += q * row[source]


def smith_normal_form(matrix):
    """Return ``(U, D, V)`` with ``U @ matrix @ V == D`` in Smith form.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with non-negative
    entries ``d_1 | d_2 | ...`` (zeros last).  Works for any shape.
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    u, v = identity(m), identity(n)

    t = 0
    while t < min(m, n):
        entries = [(abs(a[i][j]), i, j) for i in range(t, m)
                   for j in range(t, n) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        if pi != t:
            _swap_rows(a, t, pi)
            _swap_rows(u, t, pi)
        if pj != t:
            _swap_cols(a, t, pj)
            _swap_cols(v, t, pj)
        p = a[t][t]

        clean = True
        for i in range(t + 1, m):
            q = a[i][t] // p
            if q:
                _add_row(a, i, t, -q)
                _add_row(u, i, t, -q)
            if a[i][t]:
                clean = False
        for j in range(t + 1, n):
            q = a[t][j] // p
            if q:
                _add_col(a, j, t, -q)
                _add_col(v, j, t, -q)
            if a[t][j]:
                clean = False
        if not clean:
            continue  # a smaller remainder now exists; re-pivot

        bad = next((i for i in range(t + 1, m)
                    for j in range(t + 1, n) if a[i][j] % p), None)
        if bad is not None:
            _add_row(a, t, bad, 1)
            _add_row(u, t, bad, 1)
            continue

        if p < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, a, v


def invariant_factors(matrix):
    """Diagonal of the Smith form, padded to ``min(rows, cols)``."""
    _, d, _ = smith_normal_form(matrix)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^rank + Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ...`` and every ``d_i >= 2``.

    Elements are plain tuples: ``rank`` free coordinates followed by one
    residue per invariant factor.
    """

    rank: int
    invariant_factors: tuple = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if any(d < 2 for d in factors):
            raise ValueError(f"invariant factors must be >= 2, got {factors}")
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {factors}")

    @property
    def torsion_order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def is_torsion_free(self):
        return not self.invariant_factors

    @property
    def ngens(self):
        return self.rank + len(self.invariant_factors)

    def zero(self):
        return (0,) * self.ngens

    def element(self, free=(), torsion=()):
        free = tuple(free) + (0,) * (self.rank - len(free))
        torsion = tuple(torsion) + (0,) * (len(self.invariant_factors) - len(torsion))
        if len(free) != self.rank or len(torsion) != len(self.invariant_factors):
            raise ValueError("coordinate vector does not match the group shape")
        return self.reduce(free + torsion)

    def reduce(self, vec):
        vec = tuple(vec)
        if len(vec) != self.ngens:
            raise ValueError(f"element {vec} does not belong to {self}")
        if not self.invariant_factors:
            return vec
        r = self.rank
        return vec[:r] + tuple(x % d for x, d in zip(vec[r:], self.invariant_factors))

    def add(self, a, b):
        if not self.invariant_factors:
            return tuple(x + y for x, y in zip(a, b))
        return self.reduce(x + y for x, y in zip(a, b))

    def neg(self, a):
        return self.reduce(-x for x in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, a, k):
        return self.reduce(k * x for x in a)

    def free_part(self, a):
        return tuple(a[:self.rank])

    def free_quotient(self):
        return AbelianGroup(self.rank)

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts) or "0"


class Homology(NamedTuple):
    """Cokernel of an exponent matrix together with generator data.

    ``images[j]`` is the class of generator ``x_{j+1}`` in ``group``;
    ``section[k]`` writes the ``k``-th basis element of ``group`` as an
    integer combination of the generators.
    """

    group: AbelianGroup
    images: tuple
    section: tuple


def free_quotient_homology(h):
    """``h`` pushed down to ``H / Tors``: torsion coordinates and basis elements dropped."""
    g = h.group
    return Homology(g.free_quotient(), tuple(g.free_part(t) for t in h.images), h.section[:g.rank])


def cokernel(matrix, ngens=None, require_positive_rank=True):
    """First homology ``Z^g / rowspace(matrix)`` with generator images.

    Raises :class:`UnsupportedInput` when the free rank is zero, unless
    ``require_positive_rank`` is false.
    """
    rows = [list(r) for r in matrix]
    g = ngens if ngens is not None else (len(rows[0]) if rows else 0)
    if not rows:
        rows = [[0] * g]
    if any(len(r) != g for r in rows):
        raise ValueError("exponent matrix rows must all have one entry per generator")
    if g == 0:
        group = AbelianGroup(0)
        if require_positive_rank:
            raise UnsupportedInput("b1 = 0: the first Betti number must be positive")
        return Homology(group, (), ())

    _, d, v = smith_normal_form(rows)
    diag = [d[i][i] if i < len(d) else 0 for i in range(g)]
    free = [k for k in range(g) if diag[k] == 0]
    tors = [k for k in range(g) if diag[k] >= 2]
    group = AbelianGroup(len(free), tuple(diag[k] for k in tors))
    if require_positive_rank and group.rank == 0:
        raise UnsupportedInput("b1 = 0: the first Betti number must be positive")

    images = tuple(group.reduce([v[j][k] for k in free] + [v[j][k] for k in tors])
                   for j in range(g))
    v_inv = _unimodular_inverse(v)
    section = tuple(tuple(v_inv[k]) for k in free + tors)
    return Homology(group, images, section)


def _unimodular_inverse(m):
    """Inverse of an integer matrix with determinant +-1."""
    n = len(m)
    u, d, v = smith_normal_form(m)
    # u m v = d with d = identity (unimodular), hence m^-1 = v u
    if any(d[i][i] != 1 for i in range(n)):
        raise ValueError("matrix is not unimodular")
    return mat_mul(v, u)
