"""The integral group ring Z[H] of a finitely generated abelian group."""

from types import MappingProxyType

from .errors import GroupMismatch
from .homology import AbelianGroup


class GroupRingElt:
    """A finitely supported map ``H -> Z``, multiplied by convolution.

    Instances are immutable.  Keys are group elements in the tuple
    encoding of :class:`~heegaard_theta.homology.AbelianGroup`; zero
    coefficients are never stored, so the zero element has empty support.
    """

    __slots__ = ("group", "_terms", "_hash")

    def __init__(self, group, terms=None):
        if not isinstance(group, AbelianGroup):
            raise TypeError("group must be an AbelianGroup")
        clean = {}
        for key, coeff in (terms or {}).items():
            key = group.reduce(key)
            clean[key] = clean.get(key, 0) + int(coeff)
        self._init(group, clean)

    def _init(self, group, terms):
        self.group = group
        self._terms = {k: c for k, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, group, terms):
        out = cls.__new__(cls)
        out._init(group, terms)
        return out

    @classmethod
    def zero(cls, group):
        return cls._raw(group, {})

    @classmethod
    def one(cls, group):
        return cls._raw(group, {group.zero(): 1})

    @classmethod
    def monomial(cls, group, element, coeff=1):
        return cls._raw(group, {group.reduce(element): int(coeff)})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def support(self):
        return sorted(self._terms)

    def coefficient(self, element):
        return self._terms.get(self.group.reduce(element), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other):
        if self.group != other.group:
            raise GroupMismatch(f"{self.group} vs {other.group}")

    def _coerce(self, other):
        if isinstance(other, GroupRingElt):
            self._check(other)
            return other
        if isinstance(other, int):
            return GroupRingElt.monomial(self.group, self.group.zero(), other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return GroupRingElt._raw(self.group, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElt._raw(self.group, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElt._raw(self.group, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        self._check(other)
        add = self.group.add
        out = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = add(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2
        return GroupRingElt._raw(self.group, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are only defined for units; use shift()")
        out = GroupRingElt.one(self.group)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElt.monomial(self.group, self.group.zero(), other)
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        return self.group == other.group and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.group, frozenset(self._terms.items())))
        return self._hash

    def shift(self, element):
        """Multiply by the unit ``[element]``."""
        h = self.group.reduce(element)
        add = self.group.add
        return GroupRingElt._raw(self.group, {add(k, h): c for k, c in self._terms.items()})

    def conjugate(self):
        """The involution induced by ``h -> -h``."""
        neg = self.group.neg
        return GroupRingElt._raw(self.group, {neg(k): c for k, c in self._terms.items()})

    def augment(self):
        """Sum of the coefficients (evaluation at the trivial character)."""
        return sum(self._terms.values())

    def project_free(self):
        """Image in ``Z[H / Tors]``."""
        quotient = self.group.free_quotient()
        r = self.group.rank
        out = {}
        for k, c in self._terms.items():
            key = k[:r]
            out[key] = out.get(key, 0) + c
        return GroupRingElt._raw(quotient, out)

    def map_group(self, target, hom):
        """Push forward along a group homomorphism ``hom`` into ``target``."""
        out = {}
        for k, c in self._terms.items():
            key = target.reduce(hom(k))
            out[key] = out.get(key, 0) + c
        return GroupRingElt._raw(target, out)

    def equal_up_to_unit(self, other):
        """Find ``(sign, h)`` with ``self == sign * [h] * other``, or return None.

        When several shifts work (possible only with torsion) the
        lexicographically least ``h`` is returned, preferring sign ``+1``.
        """
        self._check(other)
        if not self or not other:
            return (1, self.group.zero()) if not self and not other else None
        if len(self) != len(other):
            return None
        anchor = min(self._terms)
        candidates = sorted({self.group.sub(anchor, k) for k in other._terms})
        for h in candidates:
            shifted = other.shift(h)
            for sign in (1, -1):
                if all(self._terms.get(k) == sign * c for k, c in shifted._terms.items()):
                    return sign, h
        return None

    def __repr__(self):
        return f"GroupRingElt({self.group!r}, {dict(self.items())!r})"

    def __str__(self):
        return format_element(self)


def format_monomial(group, key):
    parts = []
    for i, e in enumerate(key[:group.rank], start=1):
        if e == 1:
            parts.append(f"t{i}")
        elif e:
            parts.append(f"t{i}^{e}")
    for i, r in enumerate(key[group.rank:], start=1):
        if r:
            parts.append(f"g{i}^{r}")
    return "*".join(parts) or "1"


def format_element(elt):
    """Render as a signed monomial sum, e.g. ``t1^-1*t2 + 1 - t1``."""
    if not elt:
        return "0"
    pieces = []
    for key, c in elt.items():
        mono = format_monomial(elt.group, key)
        mag = abs(c)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)
