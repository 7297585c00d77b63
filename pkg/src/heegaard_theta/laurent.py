"""Multivariate Laurent polynomials over Z: exact division, gcd, symmetrization.

A Laurent polynomial is a :class:`GroupRingElt` over a torsion-free group,
so its keys are exponent vectors.  Internally we shift to honest
polynomials (all exponents >= 0) and work with ``{exponent tuple: int}``
dicts; units ``+-[h]`` are the only ambiguity.
"""

from math import gcd as igcd

from .errors import GroupMismatch
from .group_ring import GroupRingElt


def _require_free(*polys):
    for p in polys:
        if not p.group.is_torsion_free:
            raise GroupMismatch(f"Laurent operations need a torsion-free group, got {p.group}")
    if len({p.group for p in polys}) > 1:
        raise GroupMismatch("Laurent polynomials over different ranks")


def _mins(terms, n):
    return tuple(min(k[i] for k in terms) for i in range(n))


def _shift(terms, by):
    return {tuple(a - b for a, b in zip(k, by)): c for k, c in terms.items()}


def _to_poly(p):
    """Shift so every variable's minimum exponent is 0; returns (poly, offset)."""
    terms = dict(p.terms)
    if not terms:
        return {}, (0,) * p.group.rank
    low = _mins(terms, p.group.rank)
    return _shift(terms, low), low


# -- plain multivariate polynomial arithmetic on dicts ------------------------

def _add(a, b, scale=1):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + scale * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _mul(a, b):
    out = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = tuple(x + y for x, y in zip(k1, k2))
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _scale(a, c):
    return {k: v * c for k, v in a.items()} if c else {}


def _divexact(a, b):
    """Quotient ``a / b`` if ``b`` divides ``a`` in Z[x_1..x_n], else None."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    lk = max(b)
    lc = b[lk]
    r = dict(a)
    q = {}
    while r:
        rk = max(r)
        diff = tuple(x - y for x, y in zip(rk, lk))
        if min(diff, default=0) < 0 or r[rk] % lc:
            return None
        c = r[rk] // lc
        q[diff] = c
        r = _add(r, _mul({diff: c}, b), -1)
    return q


def _normalize_sign(a):
    if a and a[max(a)] < 0:
        return _scale(a, -1)
    return a


# -- recursive gcd ------------------------------------------------------------

def _split_last(a):
    """View ``a`` as a univariate polynomial in its last variable."""
    out = {}
    for k, c in a.items():
        out.setdefault(k[-1], {})[k[:-1]] = c
    return out


def _join_last(u):
    return {k + (d,): c for d, coeff in u.items() for k, c in coeff.items()}


def _content(u, n):
    g = {}
    for coeff in u.values():
        g = _gcd(g, coeff, n)
        if g == {(0,) * n: 1}:
            break
    return g


def _primitive(u, n):
    if not u:
        return u
    c = _content(u, n)
    return {d: _divexact(coeff, c) for d, coeff in u.items()}


def _prem(u, v):
    """Pseudo-remainder of univariate ``u`` by ``v`` (coefficients are dict polys)."""
    dv = max(v)
    lv = v[dv]
    r = dict(u)
    while r and max(r) >= dv:
        dr = max(r)
        lr = r[dr]
        new = {d: _mul(c, lv) for d, c in r.items()}
        for d, c in v.items():
            key = d + dr - dv
            val = _add(new.get(key, {}), _mul(c, lr), -1)
            if val:
                new[key] = val
            else:
                new.pop(key, None)
        r = new
    return r


def _gcd(a, b, n):
    """gcd in Z[x_1..x_n] of dict polynomials, leading coefficient positive."""
    if not a:
        return _normalize_sign(b)
    if not b:
        return _normalize_sign(a)
    if n == 0:
        return {(): igcd(a[()], b[()])}
    # cheap exits: one operand divides the other
    if len(b) <= len(a) and _divexact(a, b) is not None:
        return _normalize_sign(b)
    if len(a) <= len(b) and _divexact(b, a) is not None:
        return _normalize_sign(a)

    u, v = _split_last(a), _split_last(b)
    cu, cv = _content(u, n - 1), _content(v, n - 1)
    c = _gcd(cu, cv, n - 1)
    u = {d: _divexact(x, cu) for d, x in u.items()}
    v = {d: _divexact(x, cv) for d, x in v.items()}
    if max(u) < max(v):
        u, v = v, u
    while v:
        r = _prem(u, v)
        u, v = v, _primitive(r, n - 1)
    g = _primitive(u, n - 1)
    # lift the coefficient gcd back to n variables
    lifted = {k + (0,): x for k, x in c.items()}
    return _normalize_sign(_mul(_join_last(g), lifted))


# -- public Laurent API -------------------------------------------------------

def laurent_gcd(a, b):
    """gcd of two Laurent polynomials, defined up to a unit ``+-[h]``.

    ``gcd(0, 0) == 0`` and ``gcd(a, 0) == a``.  The returned representative
    has every minimum exponent equal to 0 and positive leading coefficient.
    """
    _require_free(a, b)
    if not b:
        return a
    if not a:
        return b
    pa, _ = _to_poly(a)
    pb, _ = _to_poly(b)
    return GroupRingElt._raw(a.group, _gcd(pa, pb, a.group.rank))


def laurent_gcd_many(polys):
    """Fold :func:`laurent_gcd` over ``polys`` in order."""
    polys = list(polys)
    if not polys:
        raise ValueError("need at least one polynomial")
    out = polys[0]
    for p in polys[1:]:
        out = laurent_gcd(out, p)
    return out


def laurent_divide(a, b):
    """Exact quotient ``a / b`` in the Laurent ring, or None if ``b`` does not divide ``a``."""
    _require_free(a, b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return GroupRingElt.zero(a.group)
    pa, oa = _to_poly(a)
    pb, ob = _to_poly(b)
    q = _divexact(pa, pb)
    if q is None:
        return None
    offset = tuple(x - y for x, y in zip(oa, ob))
    return GroupRingElt._raw(a.group, _shift(q, tuple(-x for x in offset)))


def divides(b, a):
    return laurent_divide(a, b) is not None if b else not a


def symmetrize(p):
    """Translate ``p`` so its support is centred at the origin.

    Returns ``(representative, pinned)``.  ``pinned`` is true when the
    centred representative equals its conjugate; if some bounding-box side
    has odd length no centred translate exists and ``p`` comes back unshifted.
    """
    _require_free(p)
    if not p:
        return p, True
    terms = p.terms
    n = p.group.rank
    lo = _mins(terms, n)
    hi = tuple(max(k[i] for k in terms) for i in range(n))
    if any((x + y) % 2 for x, y in zip(lo, hi)):
        return p, False
    centre = tuple((x + y) // 2 for x, y in zip(lo, hi))
    rep = p.shift(tuple(-c for c in centre))
    return rep, rep == rep.conjugate()


def univariate_coefficients(p):
    """``{exponent: coefficient}`` for a rank-one Laurent polynomial."""
    if p.group.rank != 1 or not p.group.is_torsion_free:
        raise GroupMismatch("expected a Laurent polynomial in one variable")
    return {k[0]: c for k, c in p.items()}


def from_univariate(group, coeffs):
    return GroupRingElt(group, {(k,): c for k, c in coeffs.items()})
