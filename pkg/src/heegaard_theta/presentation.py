"""Balanced presentations, abelianized Fox calculus and Heegaard moves.

A word is a tuple of non-zero ints: ``k`` stands for the generator
``x_k`` and ``-k`` for its inverse (generators are numbered from 1).

File format::

    # comment
    genus: 2
    relators:
      x1 x2 x1^-1 x2^-1
      -

A relator line holding only ``-`` is the empty word.
"""

import random
from dataclasses import dataclass

from .errors import PresentationError, UnsupportedInput
from .group_ring import GroupRingElt
from .homology import Homology, cokernel


@dataclass(frozen=True)
class BalancedPresentation:
    genus: int
    relators: tuple

    def __post_init__(self):
        relators = tuple(tuple(int(a) for a in w) for w in self.relators)
        object.__setattr__(self, "relators", relators)
        if self.genus < 1:
            raise PresentationError(f"genus must be at least 1, got {self.genus}")
        if len(relators) != self.genus:
            raise PresentationError(
                f"unbalanced presentation: {self.genus} generators but {len(relators)} relators")
        for w in relators:
            for a in w:
                if a == 0 or abs(a) > self.genus:
                    raise PresentationError(f"generator index {a} out of range 1..{self.genus}")

    def exponent_matrix(self):
        rows = []
        for w in self.relators:
            row = [0] * self.genus
            for a in w:
                row[abs(a) - 1] += 1 if a > 0 else -1
            rows.append(row)
        return rows

    def homology(self):
        """``H_1`` of the presented group; raises UnsupportedInput if ``b1 = 0``."""
        return cokernel(self.exponent_matrix(), self.genus)

    def __str__(self):
        return format_presentation(self)


def _format_word(word):
    if not word:
        return "-"
    return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in word)


def format_presentation(p):
    lines = [f"genus: {p.genus}", "relators:"]
    lines.extend("  " + _format_word(w) for w in p.relators)
    return "\n".join(lines) + "\n"


def _parse_token(tok, lineno, col):
    base, _, exp = tok.partition("^")
    if not base.startswith("x") or not base[1:].isdigit():
        raise PresentationError(f"bad token {tok!r}", lineno, col)
    k = int(base[1:])
    if k < 1:
        raise PresentationError(f"generator index must be positive in {tok!r}", lineno, col)
    if not exp:
        return k
    if exp == "-1":
        return -k
    if exp in ("1", "+1"):
        return k
    raise PresentationError(f"exponent must be 1 or -1 in {tok!r}", lineno, col)


def parse_presentation(text):
    """Parse the text format described in the module docstring."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise PresentationError(f"input is not valid UTF-8: {exc}") from None

    lines = [(n, line) for n, line in enumerate(text.splitlines(), start=1)
             if line.strip() and not line.lstrip().startswith("#")]
    if not lines:
        raise PresentationError("empty input")

    n, line = lines[0]
    key, sep, value = line.partition(":")
    if key.strip() != "genus" or not sep:
        raise PresentationError("expected 'genus: <g>'", n, 1)
    value_col = len(line) - len(value.lstrip()) + 1 if value.strip() else len(line) + 1
    try:
        genus = int(value)
    except ValueError:
        raise PresentationError(f"genus must be an integer, got {value.strip()!r}",
                                n, value_col) from None
    if genus < 1:
        raise PresentationError(f"genus must be at least 1, got {genus}", n, value_col)

    if len(lines) < 2 or lines[1][1].strip() != "relators:":
        where = lines[1][0] if len(lines) > 1 else n + 1
        raise PresentationError("expected 'relators:'", where, 1)

    relators = []
    for n, line in lines[2:]:
        if line.strip() == "-":
            relators.append(())
            continue
        word = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col) + 1
            a = _parse_token(tok, n, col)
            if abs(a) > genus:
                raise PresentationError(f"generator x{abs(a)} out of range 1..{genus}", n, col)
            word.append(a)
            col += len(tok) - 1
        relators.append(tuple(word))

    if len(relators) != genus:
        raise PresentationError(
            f"unbalanced presentation: genus {genus} but {len(relators)} relators",
            lines[-1][0])
    return BalancedPresentation(genus, tuple(relators))


def free_reduce(word):
    out = []
    for a in word:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def fox_derivative_abelian(word, j, images, group):
    """Image in ``Z[H]`` of the Fox derivative of ``word`` with respect to ``x_j``.

    ``images[k-1]`` is the class of ``x_k`` in ``group``.
    """
    prefix = group.zero()
    out = {}
    for a in word:
        t = images[abs(a) - 1]
        if a > 0:
            if a == j:
                out[prefix] = out.get(prefix, 0) + 1
            prefix = group.add(prefix, t)
        else:
            prefix = group.sub(prefix, t)
            if -a == j:
                out[prefix] = out.get(prefix, 0) - 1
    return GroupRingElt(group, out)


def word_image(word, images, group):
    """Class of ``word`` in ``group``."""
    h = group.zero()
    for a in word:
        t = images[abs(a) - 1]
        h = group.add(h, t) if a > 0 else group.sub(h, t)
    return h


@dataclass(frozen=True)
class BoundaryMatrix:
    """``g x g`` matrix over ``Z[H]``; ``entries[i][j]`` is the coefficient of
    the lifted 1-cell ``a_j`` in the boundary of the lifted 2-cell ``b_i``."""

    group: object
    generator_images: tuple
    entries: tuple

    @property
    def size(self):
        return len(self.entries)

    def row_identity_residual(self, i):
        """``sum_j entries[i][j] * ([t_j] - 1)``; zero for a consistent matrix."""
        one = GroupRingElt.one(self.group)
        total = GroupRingElt.zero(self.group)
        for e, t in zip(self.entries[i], self.generator_images):
            total = total + e * (GroupRingElt.monomial(self.group, t) - one)
        return total

    def fundamental_identity_holds(self):
        return all(not self.row_identity_residual(i) for i in range(self.size))

    def replace(self, entries=None, generator_images=None):
        return BoundaryMatrix(
            self.group,
            tuple(generator_images) if generator_images is not None else self.generator_images,
            tuple(tuple(r) for r in entries) if entries is not None else self.entries)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


def boundary_matrix(p, homology=None):
    """Equivariant boundary map of the maximal abelian cover.

    ``homology`` defaults to ``p.homology()``; passing one explicitly lets
    related presentations (e.g. a stabilization) share coordinates.
    """
    if homology is None:
        homology = p.homology()
    group, images = homology.group, homology.images
    if group.rank == 0:
        raise UnsupportedInput("b1 = 0: the first Betti number must be positive")
    if len(images) != p.genus:
        raise ValueError("homology data does not match the presentation genus")
    entries = tuple(
        tuple(fox_derivative_abelian(w, j, images, group) for j in range(1, p.genus + 1))
        for w in p.relators)
    return BoundaryMatrix(group, tuple(images), entries)


def stabilize(p):
    """Add a cancelling handle pair: new generator ``x_{g+1}`` and relator ``x_{g+1}``."""
    g = p.genus + 1
    return BalancedPresentation(g, p.relators + ((g,),))


def stabilized_homology(h):
    """Homology data for :func:`stabilize` expressed in the old coordinates."""
    return Homology(h.group, h.images + (h.group.zero(),),
                    tuple(row + (0,) for row in h.section))


def transport(elt, source, target):
    """Map ``elt`` from ``Z[source.group]`` to ``Z[target.group]``.

    The isomorphism sends the class of generator ``x_j`` under ``source`` to
    its class under ``target``; both must describe the same group on a
    common prefix of generators.
    """
    sg, tg = source.group, target.group
    basis_images = []
    for combo in source.section:
        h = tg.zero()
        for j, c in enumerate(combo):
            if c:
                h = tg.add(h, tg.scale(target.images[j], c))
        basis_images.append(h)

    def hom(key):
        h = tg.zero()
        for c, b in zip(key, basis_images):
            if c:
                h = tg.add(h, tg.scale(b, c))
        return h

    if elt.group != sg:
        raise ValueError("element does not live over the source group")
    return elt.map_group(tg, hom)


def handle_slide_rows(m, i, j, sign, h):
    """Row ``i`` += ``sign * [h] *`` row ``j`` (indices from 1); a beta-curve slide."""
    if i == j:
        raise ValueError("a handle cannot slide over itself")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    i, j = i - 1, j - 1
    rows = [list(r) for r in m.entries]
    rows[i] = [a + b.shift(h) * sign for a, b in zip(rows[i], rows[j])]
    return m.replace(entries=rows)


def handle_slide_cols(m, i, j, sign, h):
    """Column ``i`` += ``sign * [h] *`` column ``j`` (indices from 1); an alpha-curve slide.

    The 1-cell ``a_j`` is replaced by ``a_j - sign*[h]*a_i``, so the move is
    only geometric when that is again the lift of a generator: ``sign = -1``
    with ``h = t_j`` (new image ``t_j + t_i``) or ``sign = +1`` with
    ``h = t_j - t_i`` (new image ``t_j - t_i``).  Anything else is rejected.
    """
    if i == j:
        raise ValueError("a handle cannot slide over itself")
    g = m.group
    ti, tj = m.generator_images[i - 1], m.generator_images[j - 1]
    h = g.reduce(h)
    if sign == -1 and h == tj:
        new_image = g.add(tj, ti)
    elif sign == 1 and h == g.sub(tj, ti):
        new_image = g.sub(tj, ti)
    else:
        raise ValueError("column slide must use h = t_j (sign -1) or h = t_j - t_i (sign +1)")
    rows = []
    for row in m.entries:
        row = list(row)
        row[i - 1] = row[i - 1] + row[j - 1].shift(h) * sign
        rows.append(row)
    images = list(m.generator_images)
    images[j - 1] = new_image
    return m.replace(entries=rows, generator_images=images)


def random_slide(m, rng):
    """One random row or column slide of ``m``."""
    g = m.size
    i, j = rng.sample(range(1, g + 1), 2)
    if rng.random() < 0.5:
        group = m.group
        h = group.reduce(rng.randint(-2, 2) for _ in range(group.ngens))
        return handle_slide_rows(m, i, j, rng.choice((1, -1)), h)
    ti, tj = m.generator_images[i - 1], m.generator_images[j - 1]
    if rng.random() < 0.5:
        return handle_slide_cols(m, i, j, -1, tj)
    return handle_slide_cols(m, i, j, 1, m.group.sub(tj, ti))


def _random_word(rng, genus, n):
    return tuple(rng.choice((1, -1)) * rng.randint(1, genus) for _ in range(n))


def _inverse(word):
    return tuple(-a for a in reversed(word))


def _random_commutator_word(rng, genus, max_length):
    """Product of conjugated commutators ``u [a, b] u^-1`` of length <= max_length."""
    word = ()
    while True:
        u = _random_word(rng, genus, rng.randint(0, 2))
        a = _random_word(rng, genus, rng.randint(1, 2))
        b = _random_word(rng, genus, 1)
        piece = u + a + b + _inverse(a) + _inverse(b) + _inverse(u)
        if len(word) + len(piece) > max_length or rng.random() < 0.3:
            return word
        word += piece


def random_presentation(genus, max_length, seed, style="free"):
    """Deterministic pseudo-random balanced presentation.

    ``style="free"`` draws uniform letters; ``style="commutator"`` builds
    every relator from conjugated commutators, so ``b1 = genus``;
    ``style="wirtinger"`` uses conjugation relators ``u x_i u^-1 x_{i+1}^-1``
    and an empty or commutator word last, so ``b1 = 1`` with knot-like minors.
    """
    if genus < 1:
        raise ValueError("genus must be at least 1")
    rng = random.Random(seed)
    relators = []
    for i in range(1, genus + 1):
        if style == "wirtinger":
            if i < genus:
                lo, hi = min(2, max_length // 4), max(1, (max_length - 2) // 2)
                u = _random_word(rng, genus, rng.randint(lo, hi))
                relators.append(u + (i,) + _inverse(u) + (-(i + 1),))
            elif rng.random() < 0.5:
                relators.append(())
            else:
                relators.append(_random_commutator_word(rng, genus, max_length))
        elif style == "commutator":
            relators.append(_random_commutator_word(rng, genus, max_length))
        elif style == "free":
            relators.append(_random_word(rng, genus, rng.randint(0, max_length)))
        else:
            raise ValueError(f"unknown style {style!r}")
    return BalancedPresentation(genus, tuple(relators))


STYLES = ("free", "commutator", "wirtinger")


def random_presentations_with_b1(count, max_genus, max_length, seed, styles=STYLES):
    """First ``count`` random presentations with positive first Betti number."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        style = styles[len(out) % len(styles)]
        p = random_presentation(rng.randint(1, max_genus), max_length, rng.getrandbits(32), style)
        try:
            p.homology()
        except UnsupportedInput:
            continue
        out.append(p)
    return out
