"""
Verification Suites

Bounded exhaustive and seeded-random checks of the algebra, the twist
action, the metrics, the ping-pong sets, the Hurwitz action on spherical
collections and the equivalence criteria. Every suite returns a
SuiteResult; undecided bounded searches are counted as skipped, never as
passes.
"""

import random
import time
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Any, Callable

from ..algebra.element import AlgebraElement
from ..algebra.paths import basis, dual_partner, hom_basis, path_product
from ..core.complexes import (
    Complex,
    Summand,
    compose,
    identity_map,
    projective,
    projective_sum,
    validate,
    validate_chain_map,
)
from ..core.homotopy import is_isomorphic, is_isomorphic_up_to_shift, is_null_homotopic
from ..core.minimize import minimize_with_equivalence
from ..core.slices import in_X_minus, in_X_plus, in_X_w
from ..core.spherical import base_tuple, check_equiv, hurwitz_spherical, is_o_spherical, pairing_holds
from ..core.twists import psi, psi_generator, psi_projective, sigma, unminimized_twist
from ..freegroup.bessis import (
    Decision,
    UnknownWithinBound,
    all_simples,
    enumerate_simples,
    is_gamma_reflection,
    left_factor,
)
from ..freegroup.reflections import bounded_reflections, braid_moves
from ..freegroup.words import Word, all_reduced_words, counts, gamma, reduce
from ..gradings.base import BaseGrading
from ..gradings.factory import create_grading
from ..gradings.orientation import OrientationGrading
from ..metrics.dual import d_dual, dual_witness
from ..metrics.exotic import d_cox, d_exotic
from ..metrics.homological import homological_phi
from ..utils.logger import get_logger
from ..utils.workers import parallel_map

logger = get_logger("verify")

MODES = ("path", "tilde", "vec")


@dataclass
class SuiteFailure:
    """One failed case."""
    case: str
    detail: str = ""


@dataclass
class SuiteResult:
    """Outcome of a verification suite."""
    name: str
    checked: int
    passed: int
    skipped_unknown: int
    failures: list[SuiteFailure]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "skipped_unknown": self.skipped_unknown,
            "failures": [{"case": f.case, "detail": f.detail} for f in self.failures],
            "elapsed": round(self.elapsed, 3),
            "ok": self.ok,
        }


@dataclass
class VerifyContext:
    """Parameters shared by all suites."""
    n: int = 2
    bound: int = 3
    seed: int = 0
    maxlen: int = 4
    samples: int = 50
    conjugator_length: int = 2
    braid_depth: int = 3
    workers: int = 1

    @classmethod
    def from_config(cls, config: dict[str, Any], **overrides: Any) -> "VerifyContext":
        verify = config.get("verify", {})
        values = {
            "n": config.get("n", 2),
            "bound": config.get("bound", 3),
            "seed": config.get("seed", 0),
            "maxlen": verify.get("maxlen", 4),
            "samples": verify.get("samples", 50),
            "conjugator_length": verify.get("conjugator_length", 2),
            "braid_depth": verify.get("braid_depth", 3),
            "workers": config.get("threads", 1),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.passed = 0
        self.skipped = 0
        self.failures: list[SuiteFailure] = []
        self._start = time.perf_counter()

    def check(self, ok: bool, case: str, detail: str = "") -> bool:
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(SuiteFailure(case, detail))
            logger.debug(f"[{self.name}] failed {case} {detail}")
        return ok

    def skip(self, case: str, reason: str = "") -> None:
        self.checked += 1
        self.skipped += 1
        logger.debug(f"[{self.name}] skipped {case}: {reason}")

    def result(self) -> SuiteResult:
        return SuiteResult(
            self.name, self.checked, self.passed, self.skipped, self.failures, time.perf_counter() - self._start
        )


def _random_word(rng: random.Random, n: int, max_length: int) -> Word:
    letters = [l for i in range(1, n + 1) for l in (i, -i)]
    return reduce(Word(tuple(rng.choice(letters) for _ in range(rng.randint(1, max_length)))))


# algebra


def suite_algebra(ctx: VerifyContext) -> SuiteResult:
    tally = _Tally("algebra")
    for n in range(1, 6):
        tally.check(len(basis(n)) == 2 * n * n, f"dim A for n={n}")
        for i, j in cartesian(range(1, n + 1), repeat=2):
            tally.check(len(set(hom_basis(i, j, n))) == 2, f"dim e{i} A e{j} for n={n}")

    gradings = [create_grading(mode) for mode in MODES]
    for n in range(1, 4):
        paths = [AlgebraElement.of(p) for p in basis(n)]
        associative = True
        for a, b, c in cartesian(paths, repeat=3):
            if (a * b) * c != a * (b * c):
                associative = False
                tally.check(False, f"associativity n={n}", f"({a})({b})({c})")
                break
        if associative:
            tally.check(True, f"associativity n={n}")

        for grading in gradings:
            homogeneous = all(
                grading.degree(ab) == grading.degree(a) + grading.degree(b)
                for a, b in cartesian(basis(n), repeat=2)
                if (ab := path_product(a, b)) is not None
            )
            tally.check(homogeneous, f"homogeneity n={n} mode={grading.name}")
    return tally.result()


# functors


def sigma_closed_form(i: int, sign: int, j: int, rank: int, grading: BaseGrading) -> Complex:
    """Sigma_i^{+-1}(P_j) written down directly."""
    s = grading.loop_degree
    if i == j:
        return projective(i, sign * s, sign, rank, grading)
    summands = [Summand(0, j, 0, 0)]
    entries = []
    for uid, b in enumerate(hom_basis(i, j), start=1):
        if sign > 0:
            summands.append(Summand(1, i, s - grading.degree(b), uid))
            entries.append((0, uid, AlgebraElement.of(dual_partner(b))))
        else:
            summands.append(Summand(-1, i, -grading.degree(b), uid))
            entries.append((uid, 0, AlgebraElement.of(b)))
    return Complex.build(rank, grading, summands, entries)


def suite_functors(ctx: VerifyContext) -> SuiteResult:
    tally = _Tally("functors")
    for mode in MODES:
        grading = create_grading(mode)
        for rank in (2, 3, 4):
            for i, j in cartesian(range(1, rank + 1), repeat=2):
                for sign in (1, -1):
                    case = f"mode={mode} n={rank} sigma_{i}^{sign}(P{j})"
                    computed = sigma(i, sign, projective(j, 0, 0, rank, grading))
                    validate(computed)
                    expected = sigma_closed_form(i, sign, j, rank, grading)
                    tally.check(is_isomorphic(computed, expected), case)
    return tally.result()


# invertibility


def suite_invertibility(ctx: VerifyContext) -> SuiteResult:
    tally = _Tally("invertibility")
    rng = ctx.rng("invertibility")
    words = [Word()] + [_random_word(rng, ctx.n, 5) for _ in range(ctx.samples)]
    for mode in MODES:
        grading = create_grading(mode)
        for w in words:
            j = rng.randint(1, ctx.n)
            y = psi_projective(w, j, ctx.n, grading)
            for i in range(1, ctx.n + 1):
                there = sigma(i, -1, sigma(i, 1, y))
                back = sigma(i, 1, sigma(i, -1, y))
                case = f"mode={mode} i={i} Y=Psi_[{w}](P{j})"
                tally.check(is_isomorphic(there, y) and is_isomorphic(back, y), case)
    return tally.result()


# metrics


def _metric1_case(args: tuple[Word, int]) -> tuple[str, bool, str]:
    w, n = args
    low, high = homological_phi(w, n, OrientationGrading.tilde())
    positive, negative = counts(w)
    ok = (low, high) == (-negative, positive) and high - low == len(w)
    return f"n={n} w={w}", ok, f"phi=({low}, {high}) counts=({positive}, {negative})"


def suite_metric1(ctx: VerifyContext) -> SuiteResult:
    tally = _Tally("metric1")
    jobs = [(w, ctx.n) for w in all_reduced_words(ctx.n, ctx.maxlen)]
    for case, ok, detail in parallel_map(_metric1_case, jobs, workers=ctx.workers):
        tally.check(ok, case, detail)
    return tally.result()


def suite_metric2(ctx: VerifyContext) -> SuiteResult:
    tally = _Tally("metric2")
    n = ctx.n
    g = gamma(n)
    simples = [s for s in enumerate_simples(n, ctx.bound) if s]
    generators = simples + [s.inverse() for s in simples]

    candidates = [g, g.inverse()] + [Word.generator(i, sign) for i in range(1, n + 1) for sign in (1, -1)]
    rng = ctx.rng("metric2")
    for _ in range(ctx.samples):
        k = rng.randint(1, 3)
        candidates.append(reduce(Word(sum((rng.choice(generators).letters for _ in range(k)), ()))))

    for beta in dict.fromkeys(candidates):
        case = f"n={n} beta={beta}"
        distance = d_dual(beta, n, ctx.bound)
        if distance.agrees is None:
            tally.skip(case, "search oracle not certified")
            continue
        tally.check(distance.agrees, case, f"homological={distance.homological} oracle={distance.oracle}")

    vec = OrientationGrading.vec()
    for k in range(3):
        for s in simples + [Word()]:
            if s == g:
                continue
            beta = reduce(Word(g.letters * k + s.letters))
            low, _ = homological_phi(beta, n, vec)
            tally.check(low == k, f"gamma^{k} * [{s}]", f"phi_-={low}")
    return tally.result()


def suite_exotic(ctx: VerifyContext) -> SuiteResult:
    tally = _Tally("exotic")
    alpha, beta = Word.of(2, 1), Word.of(1, 3, -1)
    tally.check(d_exotic(alpha, beta, 3) == 2, "d_exotic(s2 s1, s1 s3 s1^-1)")
    tally.check(d_cox(alpha, beta) == 3, "d_cox(s2 s1, s1 s3 s1^-1)")

    for w in all_reduced_words(2, ctx.maxlen):
        exotic, cox = d_exotic(w, Word(), 2), d_cox(w, Word())
        tally.check(exotic == cox, f"n=2 w={w}", f"exotic={exotic} cox={cox}")

    rng = ctx.rng("exotic")
    n = max(ctx.n, 3)
    for _ in range(ctx.samples):
        a, b, c = (_random_word(rng, n, ctx.maxlen) for _ in range(3))
        ab, ba = d_exotic(a, b, n), d_exotic(b, a, n)
        tally.check(ab <= d_cox(a, b), f"n={n} bound a={a} b={b}", f"exotic={ab} cox={d_cox(a, b)}")
        tally.check(ab == ba, f"symmetry a={a} b={b}")
        tally.check(ab <= d_exotic(a, c, n) + d_exotic(c, b, n), f"triangle a={a} b={b} c={c}")
        positive = Word(tuple(abs(l) for l in a.letters))
        tally.check(d_exotic(positive, Word(), n) == d_cox(positive, Word()), f"positive w={positive}")
    return tally.result()


# ping-pong


def _pingpong_case(args: tuple[Word, int, int]) -> tuple[str, bool, str]:
    w, j, n = args
    grading = OrientationGrading.tilde()
    y = psi_projective(w, j, n, grading)
    letters = list(w.letters)
    while letters and abs(letters[-1]) == j:
        letters.pop()
    memberships = {}
    for i in range(1, n + 1):
        memberships[(i, 1)] = in_X_plus(y, i)
        memberships[(i, -1)] = in_X_minus(y, i)
    held = [key for key, value in memberships.items() if value]
    if letters:
        expected = [(abs(letters[0]), 1 if letters[0] > 0 else -1)]
        ok = held == expected
    else:
        ok = len(held) <= 1
    return f"n={n} Psi_[{w}](P{j})", ok, f"memberships={held}"


def suite_pingpong(ctx: VerifyContext) -> SuiteResult:
    tally = _Tally("pingpong")
    jobs = [(w, j, ctx.n) for w in all_reduced_words(ctx.n, ctx.maxlen) for j in range(1, ctx.n + 1)]
    for case, ok, detail in parallel_map(_pingpong_case, jobs, workers=ctx.workers):
        tally.check(ok, case, detail)
    return tally.result()


def gamma_reflections(n: int, bound: int) -> tuple[list[Word], int]:
    """Certified simple reflections within the bound, and the undecided count."""
    found, undecided = [], 0
    for t in bounded_reflections(n, bound):
        decision = is_gamma_reflection(t, n, bound)
        if decision is Decision.YES:
            found.append(t)
        elif decision is Decision.UNKNOWN:
            undecided += 1
    return found, undecided


def suite_dual(ctx: VerifyContext) -> SuiteResult:
    tally = _Tally("dual")
    n = ctx.n
    reflections, undecided = gamma_reflections(n, ctx.bound)
    for _ in range(undecided):
        tally.skip("reflection set", "simple reflection undecided")

    for w in all_simples(n, ctx.bound):
        try:
            witness = dual_witness(w, n, ctx.bound)
            if not tally.check(in_X_w(witness, w, reflections, ctx.bound), f"Y_[{w}] in X_[{w}]"):
                continue
            for u in reflections:
                head = left_factor(u * w, n, ctx.bound)
                moved = psi(u, witness)
                tally.check(
                    in_X_w(moved, head, reflections, ctx.bound),
                    f"Psi_[{u}] Y_[{w}] in X_[{head}]",
                )
        except UnknownWithinBound as exc:
            tally.skip(f"w={w}", str(exc))
    return tally.result()


# hurwitz


def suite_hurwitz(ctx: VerifyContext) -> SuiteResult:
    tally = _Tally("hurwitz")
    n = ctx.n
    vec = OrientationGrading.vec()
    base = base_tuple(n, vec)
    tally.check(is_o_spherical(base), "base tuple")

    orbit = {(): base}
    layer = [()]
    for _ in range(ctx.braid_depth):
        following = []
        for braid in layer:
            for move in braid_moves(n):
                if braid and braid[-1] == -move:
                    continue
                extended = braid + (move,)
                orbit[extended] = hurwitz_spherical(move, orbit[braid])
                following.append(extended)
        layer = following

    representatives: dict[tuple[Word, ...], tuple[int, ...]] = {}
    for braid, collection in orbit.items():
        if not braid:
            continue
        case = f"braid={list(braid)}"
        tally.check(is_o_spherical(collection), f"{case} o-spherical")
        tally.check(pairing_holds(collection), f"{case} pairing")
        representatives.setdefault(tuple(t for t, _ in collection), braid)

    items = list(representatives.items())
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            left, right = orbit[items[a][1]], orbit[items[b][1]]
            differs = any(
                not is_isomorphic_up_to_shift(x, y) for (_, x), (_, y) in zip(left, right)
            )
            tally.check(differs, f"freeness {list(items[a][1])} vs {list(items[b][1])}")
    return tally.result()


# equivalence criteria


def suite_equiv(ctx: VerifyContext) -> SuiteResult:
    tally = _Tally("equiv")
    n = ctx.n
    bound = 2 * ctx.conjugator_length + 1
    reflections, undecided = gamma_reflections(n, bound)
    for _ in range(undecided):
        tally.skip("reflection set", "simple reflection undecided")

    vec = OrientationGrading.vec()
    for t in reflections:
        for u in reflections:
            if t == u:
                continue
            report = check_equiv(t, u, n, vec, bound)
            case = f"t={t} u={u}"
            if any(not d.known for d in report.criteria.values()):
                tally.skip(case, "undecided criterion")
                continue
            tally.check(report.consistent, case, str(report.to_dict()["criteria"]))
    return tally.result()


# faithfulness


def _faithful_case(args: tuple[Word, int, str]) -> tuple[str, bool, str]:
    w, n, mode = args
    grading = create_grading(mode)
    image = psi_generator(w, n, grading)
    generator = projective_sum(n, grading)
    moved = image.signature() != generator.signature() or not is_isomorphic(image, generator)
    return f"mode={mode} n={n} w={w}", moved, ""


def suite_faithful(ctx: VerifyContext) -> SuiteResult:
    tally = _Tally("faithful")
    jobs = [(w, ctx.n, mode) for mode in MODES for w in all_reduced_words(ctx.n, ctx.maxlen) if w]
    for case, ok, detail in parallel_map(_faithful_case, jobs, workers=ctx.workers):
        tally.check(ok, case, detail)
    return tally.result()


# minimization


def suite_minimize(ctx: VerifyContext) -> SuiteResult:
    tally = _Tally("minimize")
    rng = ctx.rng("minimize")
    for mode in MODES:
        grading = create_grading(mode)
        for _ in range(max(1, ctx.samples // 5)):
            w = _random_word(rng, ctx.n, 4)
            y = psi_projective(w, rng.randint(1, ctx.n), ctx.n, grading)
            raw = unminimized_twist(rng.randint(1, ctx.n), rng.choice((1, -1)), y)
            case = f"mode={mode} raw twist of Psi_[{w}]"
            minimal, f, g = minimize_with_equivalence(raw)
            validate(minimal)
            validate_chain_map(f)
            validate_chain_map(g)
            exact = compose(g, f).matrix == identity_map(minimal).matrix
            homotopic = is_null_homotopic(compose(f, g) - identity_map(raw))
            tally.check(exact and homotopic, case, f"g.f=id {exact}, f.g~id {homotopic}")
    return tally.result()


SUITES: dict[str, Callable[[VerifyContext], SuiteResult]] = {
    "algebra": suite_algebra,
    "functors": suite_functors,
    "invertibility": suite_invertibility,
    "metric1": suite_metric1,
    "metric2": suite_metric2,
    "exotic": suite_exotic,
    "pingpong": suite_pingpong,
    "dual": suite_dual,
    "hurwitz": suite_hurwitz,
    "equiv": suite_equiv,
    "faithful": suite_faithful,
    "minimize": suite_minimize,
}


def run_suites(name: str, ctx: VerifyContext) -> list[SuiteResult]:
    """
    Run one suite by name, or every suite for "all".

    Raises:
        ValueError: On an unknown suite name
    """
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"Unknown suite: {name}")

    results = []
    for suite in names:
        logger.info(f"Running suite {suite} (n={ctx.n}, bound={ctx.bound})")
        result = SUITES[suite](ctx)
        logger.info(f"Suite {suite}: {result.passed}/{result.checked} passed, {result.skipped_unknown} skipped")
        results.append(result)
    return results


def format_suite_result(result: SuiteResult, max_failures: int = 10) -> str:
    """Format a suite result for display."""
    lines = [
        "=" * 50,
        f"SUITE: {result.name}  [{'PASS' if result.ok else 'FAIL'}]",
        "=" * 50,
        f"Checked: {result.checked}",
        f"Passed: {result.passed} | Failed: {len(result.failures)} | Skipped (unknown): {result.skipped_unknown}",
        f"Elapsed: {result.elapsed:.2f}s",
    ]
    if result.failures:
        lines.append("")
        for failure in result.failures[:max_failures]:
            lines.append(f"  FAIL {failure.case} {failure.detail}".rstrip())
        if len(result.failures) > max_failures:
            lines.append(f"  ... {len(result.failures) - max_failures} more")
    lines.append("=" * 50)
    return "\n".join(lines)
