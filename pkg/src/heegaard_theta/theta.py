"""The reduced theta invariant, Turaev torsion windows, and consistency checks.

For ``b1 = 1`` the reduced invariant is a symmetric finitely supported
function on ``Z``: with ``A = a_0 + sum a_k (T^k + T^-k)`` normalized so
that ``A(1) = |Tors|``,

    theta(i) = sum_{j >= 1} j * a_{|i| + j}.

For ``b1 > 1`` it is the symmetrized Alexander polynomial itself, up to sign.
"""

from dataclasses import dataclass, field

from .errors import UnsupportedInput
from .group_ring import GroupRingElt
from .homology import AbelianGroup
from .laurent import from_univariate, laurent_divide, univariate_coefficients


@dataclass(frozen=True)
class ThetaFunction:
    rank: int
    values: dict = field(default_factory=dict)   # b1 = 1: {i: theta(i)}, non-zero entries only
    polynomial: GroupRingElt = None              # b1 > 1
    sign_ambiguous: bool = False

    def __call__(self, i):
        if self.rank != 1:
            raise UnsupportedInput("pointwise evaluation needs b1 = 1")
        return self.values.get(i, 0)

    def support_bound(self):
        """Largest ``|i|`` with ``theta(i) != 0`` (-1 when identically zero)."""
        return max((abs(i) for i in self.values), default=-1)

    def as_laurent(self):
        if self.rank == 1:
            return from_univariate(AbelianGroup(1), self.values)
        return self.polynomial


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def theta_from_alexander(alex):
    """Reduced theta from a pinned, normalized :class:`AlexanderResult`."""
    if not alex.translation_pinned:
        raise UnsupportedInput("Alexander polynomial has no symmetric representative")
    rank = alex.polynomial.group.rank
    if rank > 1:
        return ThetaFunction(rank, polynomial=alex.polynomial, sign_ambiguous=alex.sign_ambiguity)
    a = univariate_coefficients(alex.polynomial)
    top = max((abs(k) for k in a), default=0)
    values = {}
    for i in range(-(top - 1), top):
        v = sum(j * a.get(abs(i) + j, 0) for j in range(1, top - abs(i) + 1))
        if v:
            values[i] = v
    return ThetaFunction(1, values)


@dataclass(frozen=True)
class TorsionWindow:
    """``T_t``, ``T_{t^-1}`` and ``T'`` on ``[-N, N]``.

    Outside ``[-tail_from, tail_from]`` the functions are linear tails:
    ``T_t(s) = min(0, s)``, ``T_{t^-1}(s) = -max(0, s)`` and ``T'(s) = 0``.
    """

    N: int
    T_t: dict
    T_tinv: dict
    Tprime: dict
    tail_from: int

    def relations_hold(self):
        for s in range(-self.N, self.N + 1):
            t, ti, tp = self.T_t[s], self.T_tinv[s], self.Tprime[s]
            if ti != t - s:
                return False
            if 2 * tp != t + ti + abs(s):
                return False
        return True


def turaev_functions(theta, n):
    """Window of Turaev's torsion functions, taking ``T' = theta``."""
    if theta.rank != 1:
        raise UnsupportedInput("Turaev functions T_t, T_{t^-1} need b1 = 1")
    if n < 0:
        raise ValueError("window bound must be non-negative")
    window = range(-n, n + 1)
    tprime = {s: theta(s) for s in window}
    return TorsionWindow(
        N=n,
        T_t={s: tprime[s] + min(0, s) for s in window},
        T_tinv={s: tprime[s] - max(0, s) for s in window},
        Tprime=tprime,
        tail_from=theta.support_bound() + 1,
    )


def _one_minus_t_both(group):
    t = GroupRingElt.monomial(group, (1,))
    return (1 - t) * (1 - t.conjugate())


def wall_identity_check(theta, alex):
    """Check ``(1 - T)(1 - T^-1) * theta == |Tors| - A`` exactly."""
    if theta.rank != 1 or alex.polynomial.group.rank != 1:
        raise UnsupportedInput("the wall identity is stated for b1 = 1")
    group = alex.polynomial.group
    lhs = _one_minus_t_both(group) * theta.as_laurent()
    rhs = alex.tors_order - alex.polynomial
    if lhs == rhs:
        return CheckResult("wall_identity", True)
    return CheckResult("wall_identity", False, f"lhs = {lhs}; rhs = {rhs}")


def series_theta_check(theta, alex, n):
    """Recover theta on ``[-n, n]`` as ``C * (sum_k T^k) * (sum_l T^l)`` with
    ``C = (1 - T)^2 * theta = T * (A - |Tors|)``.

    The series is bounded below, so each coefficient is a finite sum.
    """
    if theta.rank != 1:
        raise UnsupportedInput("series check is stated for b1 = 1")
    c = univariate_coefficients(alex.polynomial)
    c = {k + 1: v for k, v in c.items()}
    c[1] = c.get(1, 0) - alex.tors_order
    c = {k: v for k, v in c.items() if v}
    if not c:
        ok = not theta.values
        return CheckResult("series", ok, "" if ok else "C = 0 but theta != 0")
    # coefficient of T^s in C * (sum T^k)(sum T^l) is sum_{e <= s} c_e * (s - e + 1)
    mismatches = []
    for s in range(-n, n + 1):
        expected = sum(v * (s - e + 1) for e, v in c.items() if e <= s)
        if expected != theta(s):
            mismatches.append((s, expected, theta(s)))
    if mismatches:
        return CheckResult("series", False, f"(s, series, theta) mismatches: {mismatches[:5]}")
    return CheckResult("series", True)


def divisibility_check(minors, divisor):
    """Every entry of ``minors`` must be an exact multiple of ``divisor``."""
    bad = []
    for i, row in enumerate(minors, start=1):
        for j, d in enumerate(row, start=1):
            if not divisor:
                ok = not d
            else:
                ok = laurent_divide(d, divisor) is not None
            if not ok:
                bad.append((i, j))
    if bad:
        return CheckResult("divisibility", False, f"not divisible at (i, j) = {bad}")
    return CheckResult("divisibility", True)
