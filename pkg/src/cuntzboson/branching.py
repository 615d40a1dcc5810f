"""Branching of a restricted permutative representation into boson components.

Restricting a cyclic permutative representation to the ladder algebra splits
the reference basis into tail-equivalence classes, one per rotation of the
cycle.  Each class carries the vacuum label rotation^inf, whose periodic
letter pattern determines the boson representation class: pattern (1) is the
Fock representation, (j) the class with number-of-quanta eigenvalue pattern
j-1 at every mode, (1,2) and (2,1) the two alternating classes, and any other
primitive pattern is reported as general periodic.  Classification is never
inferred from the pattern alone: every defining identity is evaluated exactly
on the vacuum ket and recorded.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Optional

from .boson import BosonMonomial, apply_annihilate, apply_boson, apply_create
from .common import CheckResult, DomainError
from .cuntz import RepSpec
from .scalar import ONE, RadicalScalar, inv_sqrt_nat
from .states import Ket
from .words import EPWord, Word, format_word


class ClassificationError(RuntimeError):
    """A defining identity failed during classification (implementation bug)."""


@dataclass
class ComponentReport:
    vacuum_label: EPWord
    occupation_pattern: Word
    classification: str
    verified_conditions: list[CheckResult] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [
            f"component vacuum |{self.vacuum_label}>  pattern ({format_word(self.occupation_pattern)})"
            f"  classification {self.classification}",
        ]
        out.extend("  " + check.line() for check in self.verified_conditions)
        return out


def classification_of_pattern(pattern: Word) -> str:
    if len(pattern) == 1:
        return "Fock" if pattern[0] == 1 else f"F_{pattern[0]}"
    if pattern == (1, 2):
        return "F_12"
    if pattern == (2, 1):
        return "F_21"
    return f"periodic({format_word(pattern)})"


def _scale(j: int, vac: Ket) -> Ket:
    return RadicalScalar.rational(j) * vac


def classify_vacuum(vacuum: EPWord, modes: int = 6) -> tuple[str, list[CheckResult]]:
    """Classify a purely periodic vacuum and verify its defining identities.

    Identities are checked for modes 1..M with M at least twice the period;
    each check row records the exact scalar relation that was evaluated.
    """
    if vacuum.prefix:
        raise DomainError(f"vacuum labels are purely periodic, got {vacuum}")
    pattern = vacuum.cycle
    M = max(modes, 2 * len(pattern))
    vac = Ket.basis(vacuum)
    name = classification_of_pattern(pattern)
    checks: list[CheckResult] = []

    def check(label: str, got: Ket, expected: Ket) -> None:
        checks.append(CheckResult(label, got == expected, f"result {_ket_inline(got)}"))

    if len(pattern) == 1:
        j = pattern[0]
        for n in range(1, M + 1):
            check(f"a{n} a{n}* vac = {j} vac",
                  apply_annihilate(n, apply_create(n, vac)), _scale(j, vac))
        if j == 1:
            for n in range(1, M + 1):
                check(f"a{n} vac = 0", apply_annihilate(n, vac), Ket())
        else:
            for n in range(1, M + 1):
                state = vac
                for l in range(1, j):
                    state = apply_annihilate(n, state)
                    expected = 1
                    for t in range(1, l + 1):
                        expected *= j - t
                    lowered = state
                    for _ in range(l):
                        lowered = apply_create(n, lowered)
                    check(f"(a{n}*)^{l} a{n}^{l} vac = {expected} vac",
                          lowered, _scale(expected, vac))
    elif pattern in ((1, 2), (2, 1)):
        for half in range(1, M // 2 + 1):
            odd, even = 2 * half - 1, 2 * half
            killed, kept = (odd, even) if pattern == (1, 2) else (even, odd)
            check(f"a{killed} vac = 0", apply_annihilate(killed, vac), Ket())
            check(f"a{kept}* a{kept} vac = vac",
                  apply_create(kept, apply_annihilate(kept, vac)), vac)
            check(f"a{kept}^2 vac = 0",
                  apply_annihilate(kept, apply_annihilate(kept, vac)), Ket())
    else:
        for n in range(1, M + 1):
            c = vacuum.letter_at(n)
            check(f"a{n}* a{n} vac = {c - 1} vac",
                  apply_create(n, apply_annihilate(n, vac)), _scale(c - 1, vac))
    for failed in checks:
        if not failed.passed:
            raise ClassificationError(f"defining identity failed: {failed.line()}")
    return name, checks


def _ket_inline(v: Ket) -> str:
    return str(v).replace("\n", "  +  ")


def enumerate_components(spec: RepSpec, modes: int = 6) -> list[ComponentReport]:
    """One component per rotation of the cycle, classified and verified."""
    out = []
    for vacuum in spec.rotation_vacua():
        name, checks = classify_vacuum(vacuum, modes)
        out.append(ComponentReport(vacuum, vacuum.cycle, name, checks))
    return out


def classify_component(component: ComponentReport, modes: int = 6) -> str:
    name, checks = classify_vacuum(component.vacuum_label, modes)
    component.classification = name
    component.verified_conditions = checks
    return name


def cyclicity_witness(component: ComponentReport, target: EPWord) -> BosonMonomial:
    """A normal-ordered monomial carrying the vacuum onto a target label.

    Raising acts where the target letter exceeds the vacuum letter, lowering
    where it falls below; letters never drop under 1, so the image is a
    nonzero multiple of the target basis ket.
    """
    vacuum = component.vacuum_label
    if not vacuum.tail_equivalent(target):
        raise DomainError(f"target {target} is not tail-equivalent to vacuum {vacuum}")
    creators: dict[int, int] = {}
    annihilators: dict[int, int] = {}
    for n in range(1, max(len(vacuum.prefix), len(target.prefix)) + 1):
        have, want = vacuum.letter_at(n), target.letter_at(n)
        if want > have:
            creators[n] = want - have
        elif want < have:
            annihilators[n] = have - want
    return BosonMonomial(ONE, creators, annihilators)


def basis_lambda_j(j: int, bound: int) -> list[EPWord]:
    """Canonical labels of the standard cycle-(j) representation, truncated.

    All labels with prefix length <= bound and letters <= bound; these are in
    bijection with the finite words whose last letter differs from j, plus the
    vacuum itself.
    """
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    out = {EPWord((), (j,))}
    for length in range(1, bound + 1):
        for prefix in itertools.product(range(1, bound + 1), repeat=length):
            if prefix[-1] != j:
                out.add(EPWord(prefix, (j,)))
    return sorted(out, key=EPWord.sort_key)


def enumerate_labels(spec: RepSpec, prefix_bound: int, letter_bound: int) -> list[EPWord]:
    """All canonical labels with prefix length <= prefix_bound, letters <= letter_bound."""
    top = letter_bound if spec.alphabet is None else min(letter_bound, spec.alphabet)
    out = set()
    for rotation in spec.rotation_vacua():
        out.add(rotation)
        for length in range(1, prefix_bound + 1):
            for prefix in itertools.product(range(1, top + 1), repeat=length):
                word = EPWord(prefix, rotation.cycle)
                if len(word.prefix) <= prefix_bound:
                    out.add(word)
    return sorted(out, key=EPWord.sort_key)


def _rising(j: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= j + t
    return out


def _falling(j: int, l: int) -> int:
    out = 1
    for t in range(1, l + 1):
        out *= j - t
    return out


def basis_typej(j: int, mode_cutoff: int, exp_cutoff: int) -> list[tuple[BosonMonomial, RadicalScalar]]:
    """Orthonormal-basis monomials over the cycle-(j) vacuum, with normalizers.

    Creators raise any mode by up to exp_cutoff; annihilators lower by at most
    j-1 (never below occupation zero) and use disjoint modes.  The normalizer
    is 1/sqrt of the product of the rising factorials j(j+1)...(j+k-1) per
    creator and falling factorials (j-1)...(j-l) per annihilator.  For j = 1
    there are no annihilators and this reduces to 1/sqrt(k_1! ... k_p!).
    """
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    options: list[list[tuple[str, int]]] = []
    per_mode = [("skip", 0)]
    per_mode += [("create", k) for k in range(1, exp_cutoff + 1)]
    per_mode += [("lower", l) for l in range(1, min(j - 1, exp_cutoff) + 1)]
    options = [per_mode] * mode_cutoff
    out = []
    for combo in itertools.product(*options):
        creators: dict[int, int] = {}
        annihilators: dict[int, int] = {}
        norm_product = 1
        for mode, (kind, e) in enumerate(combo, start=1):
            if kind == "create":
                creators[mode] = e
                norm_product *= _rising(j, e)
            elif kind == "lower":
                annihilators[mode] = e
                norm_product *= _falling(j, e)
        monomial = BosonMonomial(ONE, creators, annihilators)
        out.append((monomial, inv_sqrt_nat(norm_product) if norm_product > 1 else ONE))
    out.sort(key=lambda pair: (pair[0].total_displacement(), pair[0].key()))
    return out


def basis_onetwov(mode_cutoff: int, exp_cutoff: int) -> list[tuple[BosonMonomial, RadicalScalar]]:
    """Orthonormal-basis monomials over the alternating (1,2)-pattern vacuum.

    Odd modes carry creators only; even modes carry either a creator or a
    single annihilator (squares of even annihilators kill the vacuum).  The
    normalizer is 1/sqrt(prod k_i! over odd creators * prod (l_i+1)! over even
    creators); even annihilators contribute factor 1.
    """
    per_mode: list[list[tuple[str, int]]] = []
    for mode in range(1, mode_cutoff + 1):
        choices = [("skip", 0)]
        choices += [("create", k) for k in range(1, exp_cutoff + 1)]
        if mode % 2 == 0:
            choices.append(("lower", 1))
        per_mode.append(choices)
    out = []
    for combo in itertools.product(*per_mode):
        creators: dict[int, int] = {}
        annihilators: dict[int, int] = {}
        norm_product = 1
        for mode, (kind, e) in enumerate(combo, start=1):
            if kind == "create":
                creators[mode] = e
                factorial = 1
                top = e if mode % 2 else e + 1
                for t in range(2, top + 1):
                    factorial *= t
                norm_product *= factorial
            elif kind == "lower":
                annihilators[mode] = 1
        monomial = BosonMonomial(ONE, creators, annihilators)
        out.append((monomial, inv_sqrt_nat(norm_product) if norm_product > 1 else ONE))
    out.sort(key=lambda pair: (pair[0].total_displacement(), pair[0].key()))
    return out


def vacuum_orthogonality(j: int, mode_bound: int, power_bound: int) -> list[CheckResult]:
    """Exact checks that pure ladder powers move the cycle-(j) vacuum off itself."""
    vacuum = Ket.basis(EPWord((), (j,)))
    checks = []
    for n in range(1, mode_bound + 1):
        for k in range(1, power_bound + 1):
            lowered = vacuum
            for _ in range(k):
                lowered = apply_annihilate(n, lowered)
            inner = vacuum.inner(lowered)
            checks.append(CheckResult(
                f"<vac | a{n}^{k} vac> = 0 in F_{j}", inner.is_zero(), f"inner {inner}"))
            raised = vacuum
            for _ in range(k):
                raised = apply_create(n, raised)
            inner = vacuum.inner(raised)
            checks.append(CheckResult(
                f"<vac | (a{n}*)^{k} vac> = 0 in F_{j}", inner.is_zero(), f"inner {inner}"))
    return checks


@dataclass
class InequivalenceReport:
    first: str
    second: str
    eigenvalues_first: tuple[int, ...]
    eigenvalues_second: tuple[int, ...]
    first_difference_mode: Optional[int]
    orthogonality_samples: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def distinct(self) -> bool:
        return self.first_difference_mode is not None

    @property
    def ok(self) -> bool:
        return self.distinct and all(c.passed for c in self.checks)


def inequivalence_witness(
    c1: ComponentReport,
    c2: ComponentReport,
    sample_size: int = 100,
    seed: int = 0,
    mode_cutoff: int = 3,
    exp_cutoff: int = 3,
) -> InequivalenceReport:
    """Pairwise inequivalence evidence for two components.

    Structural witness: the number-operator eigenvalue sequences of the two
    vacua (the periodic letter patterns) differ at some mode.  When both vacua
    live in one ambient representation (their patterns are rotations of each
    other) the orthogonality <x vac1 | vac2> = 0 is additionally sampled over
    random normal-ordered monomials x, exactly.
    """
    p1, p2 = c1.occupation_pattern, c2.occupation_pattern
    if p1 == p2:
        raise DomainError("components have identical patterns; nothing to distinguish")
    window = 2 * lcm(len(p1), len(p2))
    ev1 = tuple(c1.vacuum_label.letter_at(n) for n in range(1, window + 1))
    ev2 = tuple(c2.vacuum_label.letter_at(n) for n in range(1, window + 1))
    first_diff = next((n for n in range(1, window + 1) if ev1[n - 1] != ev2[n - 1]), None)
    report = InequivalenceReport(
        c1.classification, c2.classification, ev1, ev2, first_diff, 0)
    report.checks.append(CheckResult(
        f"number-operator eigenvalue lists differ: {ev1} vs {ev2}",
        first_diff is not None,
        f"first difference at mode {first_diff}",
    ))
    same_ambient = p1 in [p2[i:] + p2[:i] for i in range(len(p2))]
    if same_ambient:
        vac1 = Ket.basis(c1.vacuum_label)
        vac2 = Ket.basis(c2.vacuum_label)
        rng = random.Random(seed)
        for idx in range(sample_size):
            x = _random_monomial(rng, mode_cutoff, exp_cutoff)
            inner = apply_boson(x, vac1).inner(vac2)
            report.checks.append(CheckResult(
                f"<x vac1 | vac2> = 0 for sample {idx}: x = {x}",
                inner.is_zero(), f"inner {inner}"))
        report.orthogonality_samples = sample_size
    return report


def _random_monomial(rng: random.Random, mode_cutoff: int, exp_cutoff: int) -> BosonMonomial:
    creators: dict[int, int] = {}
    annihilators: dict[int, int] = {}
    for mode in range(1, mode_cutoff + 1):
        role = rng.choice(("skip", "create", "lower"))
        if role == "create":
            creators[mode] = rng.randint(1, exp_cutoff)
        elif role == "lower":
            annihilators[mode] = rng.randint(1, exp_cutoff)
    return BosonMonomial(ONE, creators, annihilators)


def component_of(components: Iterable[ComponentReport], label: EPWord) -> Optional[ComponentReport]:
    """The unique component whose vacuum is tail-equivalent to the label, if any."""
    hits = [c for c in components if c.vacuum_label.tail_equivalent(label)]
    if len(hits) > 1:
        raise ClassificationError(f"label {label} matched {len(hits)} components")
    return hits[0] if hits else None
