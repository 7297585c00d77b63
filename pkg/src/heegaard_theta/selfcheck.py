"""Randomized invariance suites behind ``heegaard-theta selfcheck``."""

import random
from dataclasses import dataclass, field
from importlib import resources

from .errors import NormalizationError
from .homology import AbelianGroup, free_quotient_homology
from .presentation import (
    boundary_matrix,
    format_presentation,
    parse_presentation,
    random_presentations_with_b1,
    random_slide,
    stabilize,
    stabilized_homology,
    transport,
)
from .laurent import from_univariate
from .theta import divisibility_check, theta_from_alexander, wall_identity_check
from .torsion import AlexanderResult, alexander, alexander_gcd, all_projected_minors, minor_det

FIXTURES = ("s1xs2", "t3", "trefoil_zero", "figure_eight_zero", "s1xs2_sum", "s1xs2_lens3")


def load_fixture(name):
    text = resources.files(__package__).joinpath("fixtures", f"{name}.pres").read_text()
    return parse_presentation(text)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)  # (presentation, detail)

    @property
    def passed(self):
        return not self.failures

    def fail(self, p, detail):
        self.failures.append((p, detail))

    def line(self):
        if self.passed:
            return f"{self.name}: PASS ({self.cases} cases)"
        return f"{self.name}: FAIL ({len(self.failures)}/{self.cases} cases)"

    def counterexample(self):
        """The smallest failing presentation (by genus, then total word length)."""
        if not self.failures:
            return None
        return min(self.failures,
                   key=lambda f: (f[0].genus, sum(map(len, f[0].relators)), str(f[0])))


@dataclass
class SelfCheckSummary:
    suites: list

    @property
    def passed(self):
        return all(s.passed for s in self.suites)

    def render(self):
        lines = [s.line() for s in self.suites]
        for s in self.suites:
            ce = s.counterexample()
            if ce is not None:
                p, detail = ce
                lines.append(f"counterexample for {s.name}: {detail}")
                lines.extend("  " + ln for ln in format_presentation(p).splitlines())
        lines.append("OK" if self.passed else "FAILED")
        return "\n".join(lines) + "\n"


def _matrix(p, mutate, homology=None):
    m = boundary_matrix(p, homology)
    return mutate(m) if mutate else m


def _fundamental_identity(pool, mutate):
    suite = SuiteResult("fundamental_identity")
    for p in pool:
        suite.cases += 1
        m = _matrix(p, mutate)
        for i in range(m.size):
            residual = m.row_identity_residual(i)
            if residual:
                suite.fail(p, f"row {i + 1} residual {residual}")
                break
    return suite


def _stabilization(pool, trials, rng, mutate):
    suite = SuiteResult("stabilization")
    for _ in range(trials):
        p = rng.choice(pool)
        suite.cases += 1
        m = _matrix(p, mutate)
        h = p.homology()
        q, hq = p, h
        for _ in range(rng.randint(1, 2)):
            q, hq = stabilize(q), stabilized_homology(hq)
        mq = _matrix(q, mutate, hq)
        bad = [(i, j) for i in range(1, p.genus + 1) for j in range(1, p.genus + 1)
               if minor_det(m, i, j) != minor_det(mq, i, j)]
        if bad:
            suite.fail(p, f"minors changed at {bad}")
            continue
        # independent coordinates for the stabilized presentation
        fresh = q.homology()
        mf = _matrix(q, mutate)
        a = alexander_gcd(m)
        moved = transport(a, free_quotient_homology(h), free_quotient_homology(fresh))
        if moved.equal_up_to_unit(alexander_gcd(mf)) is None:
            suite.fail(p, "Alexander gcd changed under stabilization")
    return suite


def _handle_slides(pool, trials, rng, mutate):
    suite = SuiteResult("handle_slides")
    for _ in range(trials):
        p = rng.choice(pool)
        suite.cases += 1
        m = _matrix(p, mutate)
        before = alexander_gcd(m)
        moved = m
        for _ in range(rng.randint(1, 10)) if m.size > 1 else ():
            moved = random_slide(moved, rng)
        if before.equal_up_to_unit(alexander_gcd(moved)) is None:
            suite.fail(p, "Alexander gcd changed under handle slides")
        elif not moved.fundamental_identity_holds():
            suite.fail(p, "handle slides broke the fundamental identity")
    return suite


def random_symmetric_alexander(rng, tors, degree=4, bound=5):
    """Random symmetric Laurent polynomial with ``A(1) = tors``."""
    a = {k: rng.randint(-bound, bound) for k in range(1, rng.randint(0, degree) + 1)}
    a0 = tors - 2 * sum(a.values())
    coeffs = {0: a0}
    for k, v in a.items():
        coeffs[k] = coeffs[-k] = v
    return from_univariate(AbelianGroup(1), coeffs)


def _wall_identity(base, trials, rng, mutate):
    suite = SuiteResult("wall_identity")
    for p in base:
        m = _matrix(p, mutate)
        if m.group.rank != 1:
            continue
        suite.cases += 1
        try:
            alex = alexander(m)
        except NormalizationError as exc:
            suite.fail(p, str(exc))
            continue
        if not alex.translation_pinned:
            suite.fail(p, f"no symmetric representative of {alex.polynomial}")
            continue
        result = wall_identity_check(theta_from_alexander(alex), alex)
        if not result.passed:
            suite.fail(p, result.detail)
    for _ in range(trials):
        tors = rng.randint(1, 3)
        alex = AlexanderResult(random_symmetric_alexander(rng, tors), False, True, tors)
        suite.cases += 1
        result = wall_identity_check(theta_from_alexander(alex), alex)
        if not result.passed:
            suite.fail(base[0], f"A = {alex.polynomial}: {result.detail}")
    return suite


def _divisibility(pool, mutate):
    suite = SuiteResult("divisibility")
    for p in pool:
        suite.cases += 1
        m = _matrix(p, mutate)
        minors = all_projected_minors(m)
        try:
            divisor = alexander(m, minors).polynomial
        except NormalizationError:
            divisor = alexander_gcd(m, minors)
        result = divisibility_check(minors, divisor)
        if not result.passed:
            suite.fail(p, result.detail)
    return suite


def run_selfcheck(presentations=None, trials=100, seed=0, mutate=None):
    """Run every suite; ``mutate`` corrupts boundary matrices (test hook)."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    base = list(presentations) if presentations else [load_fixture(n) for n in FIXTURES]
    for p in base:
        p.homology()  # surfaces UnsupportedInput before any suite runs
    rng = random.Random(seed)
    randoms = random_presentations_with_b1(trials, 4, 8, rng.getrandbits(32))
    rich = base + random_presentations_with_b1(trials, 3, 12, rng.getrandbits(32))
    suites = [
        _fundamental_identity(base + randoms, mutate),
        _stabilization(rich, trials, rng, mutate),
        _handle_slides(rich, trials, rng, mutate),
        _wall_identity(base, trials, rng, mutate),
        _divisibility(base + randoms[:max(1, trials // 10)], mutate),
    ]
    return SelfCheckSummary(suites)

