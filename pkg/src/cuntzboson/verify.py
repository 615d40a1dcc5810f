"""Named verification suites: seeded, exact, and desk-scale.

Each suite evaluates a family of operator identities with exact scalar
arithmetic and reports per-check pass/fail; suites are deterministic in
(parameters, seed).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import boson, branching, embed
from .common import CheckResult
from .cuntz import (CuntzMonomial, CuntzPolynomial, RepSpec, apply_generator,
                    apply_monomial, apply_polynomial, check_isometry_relations)
from .scalar import ONE, RadicalScalar
from .states import Ket
from .words import EPWord


def random_scalar(rng: random.Random) -> RadicalScalar:
    terms = {1: Fraction(rng.randint(-3, 3), rng.randint(1, 3))}
    if rng.random() < 0.5:
        terms[rng.choice((2, 3, 5))] = Fraction(rng.randint(-2, 2))
    scalar = RadicalScalar(terms)
    return scalar if scalar else ONE


def random_label(rng: random.Random, spec: RepSpec, letter_bound: int = 6,
                 prefix_bound: int = 4) -> EPWord:
    top = letter_bound if spec.alphabet is None else min(letter_bound, spec.alphabet)
    prefix = tuple(rng.randint(1, top) for _ in range(rng.randint(0, prefix_bound)))
    vacuum = rng.choice(spec.rotation_vacua())
    return EPWord(prefix, vacuum.cycle)


def random_ket(rng: random.Random, spec: RepSpec, max_labels: int = 8,
               letter_bound: int = 6, prefix_bound: int = 4) -> Ket:
    entries = [
        (random_label(rng, spec, letter_bound, prefix_bound), random_scalar(rng))
        for _ in range(rng.randint(1, max_labels))
    ]
    ket = Ket(entries)
    return ket if ket else spec.gp_vector()


def random_occupations(rng: random.Random, max_modes: int = 5, max_count: int = 5,
                       mode_bound: int = 8) -> dict[int, int]:
    modes = rng.sample(range(1, mode_bound + 1), rng.randint(0, max_modes))
    return {mode: rng.randint(1, max_count) for mode in sorted(modes)}


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    MAX_FAILURES = 20

    def add(self, check: CheckResult) -> None:
        self.total += 1
        if check.passed:
            self.passed += 1
        elif len(self.failures) < self.MAX_FAILURES:
            self.failures.append(check.line())

    def extend(self, checks: Iterable[CheckResult]) -> None:
        for check in checks:
            self.add(check)

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def summary(self) -> str:
        return f"suite {self.name}: {self.passed}/{self.total} checks passed"


def run_ccr(modes: int = 6, samples: int = 50, seed: int = 7, **_) -> SuiteResult:
    """Exact commutation relations on seeded random kets of three representations."""
    result = SuiteResult("ccr")
    rng = random.Random(seed)
    for cycle in ((1,), (2,), (1, 2)):
        spec = RepSpec(cycle)
        for idx in range(samples):
            v = random_ket(rng, spec)
            for n in range(1, modes + 1):
                for m in range(1, modes + 1):
                    lhs = (boson.apply_annihilate(n, boson.apply_create(m, v))
                           - boson.apply_create(m, boson.apply_annihilate(n, v)))
                    expected = v if n == m else Ket()
                    result.add(CheckResult(
                        f"{spec} sample {idx}: [a{n}, a{m}*] = {int(n == m)}",
                        lhs == expected))
                    lhs = (boson.apply_annihilate(n, boson.apply_annihilate(m, v))
                           - boson.apply_annihilate(m, boson.apply_annihilate(n, v)))
                    result.add(CheckResult(
                        f"{spec} sample {idx}: [a{n}, a{m}] = 0", lhs.is_zero()))
                    lhs = (boson.apply_create(n, boson.apply_create(m, v))
                           - boson.apply_create(m, boson.apply_create(n, v)))
                    result.add(CheckResult(
                        f"{spec} sample {idx}: [a{n}*, a{m}*] = 0", lhs.is_zero()))
    return result


def run_relations(modes: int = 6, samples: int = 50, seed: int = 7, cutoff: int = 4, **_) -> SuiteResult:
    """Isometry relations, shift intertwining, adjointness, and associativity."""
    result = SuiteResult("relations")
    rng = random.Random(seed)
    sample_count = max(2, samples // 10)
    for spec in (RepSpec((1,)), RepSpec((1, 2)), RepSpec((1,), alphabet=2), RepSpec((1,), alphabet=3)):
        kets = [random_ket(rng, spec) for _ in range(sample_count)]
        result.extend(check_isometry_relations(spec, cutoff, kets))
        if spec.alphabet is None:
            result.extend(boson.check_intertwining(spec, kets, modes=3, gens=3))
        top = cutoff if spec.alphabet is None else min(cutoff, spec.alphabet)
        for idx in range(sample_count):
            u, v = random_ket(rng, spec), random_ket(rng, spec)
            for i in range(1, top + 1):
                lhs = apply_generator(spec, i, u).inner(v)
                rhs = u.inner(apply_generator(spec, i, v, star=True))
                result.add(CheckResult(
                    f"{spec} pair {idx}: <s{i} u, v> = <u, s{i}* v>", lhs == rhs,
                    f"{lhs} vs {rhs}"))
            if spec.alphabet is None:
                for n in range(1, 4):
                    lhs = boson.apply_annihilate(n, u).inner(v)
                    rhs = u.inner(boson.apply_create(n, v))
                    result.add(CheckResult(
                        f"{spec} pair {idx}: <a{n} u, v> = <u, a{n}* v>", lhs == rhs,
                        f"{lhs} vs {rhs}"))
    spec = RepSpec((1,))
    for idx in range(sample_count):
        a, b, c = (_random_cuntz_monomial(rng) for _ in range(3))
        left = CuntzPolynomial([a]).multiply(CuntzPolynomial([b])).multiply(CuntzPolynomial([c]))
        right = CuntzPolynomial([a]).multiply(CuntzPolynomial([b]).multiply(CuntzPolynomial([c])))
        result.add(CheckResult(
            f"associativity sample {idx}: ({a})({b})({c})", left == right,
            f"{left} vs {right}"))
        v = random_ket(rng, spec)
        via_left = apply_polynomial(spec, left, v)
        via_seq = apply_monomial(spec, a, apply_monomial(spec, b, apply_monomial(spec, c, v)))
        result.add(CheckResult(
            f"associativity action sample {idx}", via_left == via_seq))
    return result


def _random_cuntz_monomial(rng: random.Random) -> CuntzMonomial:
    left = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 2)))
    right = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 2)))
    return CuntzMonomial(random_scalar(rng), left, right)


def _orthonormal_checks(name: str, kets: list[Ket], result: SuiteResult) -> None:
    for i, u in enumerate(kets):
        norm = u.norm_squared()
        result.add(CheckResult(f"{name}: |v_{i}|^2 = 1", norm == ONE, f"norm^2 {norm}"))
        for j in range(i + 1, len(kets)):
            inner = u.inner(kets[j])
            result.add(CheckResult(
                f"{name}: <v_{i}, v_{j}> = 0", inner.is_zero(), f"inner {inner}"))


def _typej_expected_labels(j: int, modes: int, exps: int) -> set[EPWord]:
    low = j - min(j - 1, exps)
    ranges = [range(low, j + exps + 1)] * modes
    return {EPWord(combo, (j,)) for combo in itertools.product(*ranges)}


def _onetwov_expected_labels(modes: int, exps: int) -> set[EPWord]:
    ranges = []
    for mode in range(1, modes + 1):
        base = 1 if mode % 2 else 2
        ranges.append(range(1, base + exps + 1))
    tail = (1, 2) if modes % 2 == 0 else (2, 1)
    return {EPWord(combo, tail) for combo in itertools.product(*ranges)}


def run_bases(cutoff: int = 4, exps: int = 3, **_) -> SuiteResult:
    """Orthonormality, span matching, and vacuum orthogonality of the basis families."""
    result = SuiteResult("bases")
    for j in (1, 2):
        labels = branching.basis_lambda_j(j, cutoff)
        kets = [Ket.basis(w) for w in labels]
        _orthonormal_checks(f"lambda_{j} bound {cutoff}", kets, result)
        spec = RepSpec((j,))
        expected = set(branching.enumerate_labels(spec, cutoff, cutoff))
        result.add(CheckResult(
            f"lambda_{j} bound {cutoff}: span matches label enumeration",
            set(labels) == expected,
            f"{len(labels)} labels"))
    for j in (1, 2):
        vacuum = Ket.basis(EPWord((), (j,)))
        family = branching.basis_typej(j, cutoff, exps)
        kets = [normalizer * boson.apply_boson(monomial, vacuum)
                for monomial, normalizer in family]
        _orthonormal_checks(f"typej j={j} modes {cutoff} exps {exps}", kets, result)
        got_labels = {ket.labels()[0] for ket in kets}
        result.add(CheckResult(
            f"typej j={j}: span matches occupation-bounded labels",
            got_labels == _typej_expected_labels(j, cutoff, exps),
            f"{len(got_labels)} labels"))
    vacuum = Ket.basis(EPWord((), (1, 2)))
    family = branching.basis_onetwov(cutoff, exps)
    kets = [normalizer * boson.apply_boson(monomial, vacuum)
            for monomial, normalizer in family]
    _orthonormal_checks(f"onetwov modes {cutoff} exps {exps}", kets, result)
    got_labels = {ket.labels()[0] for ket in kets}
    result.add(CheckResult(
        "onetwov: span matches occupation-bounded labels",
        got_labels == _onetwov_expected_labels(cutoff, exps),
        f"{len(got_labels)} labels"))
    for j in (2, 3):
        result.extend(branching.vacuum_orthogonality(j, 4, 4))
    return result


def run_embedding(N: int = 2, samples: int = 50, seed: int = 7, cutoff: int = 4, **_) -> SuiteResult:
    """Digit formula vs generator translation, and the embedded Fock dictionary."""
    result = SuiteResult("embedding")
    rng = random.Random(seed)
    spec = embed.EmbeddingSpec(N)
    rep = spec.rep()
    omega = rep.gp_vector()
    for idx in range(samples):
        occ = random_occupations(rng, max_modes=4, max_count=5, mode_bound=6)
        coeff, word = boson.fock_word(occ)
        via_digits = embed.fock_word_in_ON(spec, occ)
        via_translation = embed.translate_word(spec, word)
        result.add(CheckResult(
            f"N={N} occupations {occ}: digit word = translated word",
            via_digits == via_translation,
            f"{via_digits} vs {via_translation}"))
        state = omega
        for mode, count in sorted(occ.items()):
            for _ in range(count):
                state = embed.embedded_create(spec, mode, state)
        expected = coeff * Ket.basis(EPWord(via_digits, (1,)))
        result.add(CheckResult(
            f"N={N} occupations {occ}: embedded creators reproduce the Fock state",
            state == expected))
    for i in range(1, cutoff + 1):
        for j in range(1, cutoff + 1):
            word_i = embed.embed_generator(spec, i)
            word_j = embed.embed_generator(spec, j)
            for idx in range(3):
                v = random_ket(rng, rep)
                got = apply_monomial(rep, CuntzMonomial(ONE, (), word_i),
                                     apply_monomial(rep, CuntzMonomial(ONE, word_j, ()), v))
                expected = v if i == j else Ket()
                result.add(CheckResult(
                    f"N={N}: embedded s{i}* s{j} = {'I' if i == j else '0'} on sample {idx}",
                    got == expected))
    images = [embed.embed_generator(spec, m) for m in range(1, 3 * cutoff + 1)]
    for a in range(len(images)):
        for b in range(len(images)):
            if a == b:
                continue
            wa, wb = images[a], images[b]
            result.add(CheckResult(
                f"N={N}: generator images {a + 1},{b + 1} prefix-incomparable",
                wa != wb[: len(wa)],
                f"{wa} vs {wb}"))
    for idx in range(samples // 5):
        label = random_label(rng, RepSpec((1,)), letter_bound=3 * (N - 1), prefix_bound=4)
        result.add(CheckResult(
            f"N={N}: encode/decode roundtrip sample {idx}",
            embed.decode_label(spec, embed.encode_label(spec, label)) == label))
    return result


def run_odometer(modes: int = 6, cutoff: int = 9, index_bound: int = 512, **_) -> SuiteResult:
    """The index model intertwines with the word model under the label bijection."""
    result = SuiteResult("odometer")
    spec = RepSpec((1,))
    for index in range(1, index_bound + 1):
        word = embed.odometer_isomorphism(index)
        result.add(CheckResult(
            f"roundtrip e{index}", embed.odometer_index(word) == index, f"word {word}"))
        for n in range(1, modes + 1):
            forward = embed.odometer_action(n, False, index)
            via_words = apply_generator(spec, n, Ket.basis(word))
            result.add(CheckResult(
                f"s{n} e{index} intertwines",
                via_words == Ket.basis(embed.odometer_isomorphism(forward))))
            backward = embed.odometer_action(n, True, index)
            via_words = apply_generator(spec, n, Ket.basis(word), star=True)
            expected = Ket() if backward is None else Ket.basis(embed.odometer_isomorphism(backward))
            result.add(CheckResult(f"s{n}* e{index} intertwines", via_words == expected))
    for n in range(1, cutoff + 1):
        image = embed.odometer_boson(n, True, {1: ONE})
        result.add(CheckResult(
            f"a{n}* e1 = e{2 ** (n - 1) + 1}",
            image == {2 ** (n - 1) + 1: ONE},
            f"image {sorted(image)}"))
    for n in range(1, min(modes, 5) + 1):
        word = embed.embed_generator(embed.EmbeddingSpec(2), n)
        for index in range(1, 65):
            via_ladder: int | None = index
            for letter in reversed(word):
                via_ladder = embed.ladder_action(2, letter, False, via_ladder)
            result.add(CheckResult(
                f"binary ladder model matches odometer for s{n} e{index}",
                via_ladder == embed.odometer_action(n, False, index)))
    return result


def run_fock_ext(modes: int = 5, cutoff: int = 3, exps: int = 4, **_) -> SuiteResult:
    """Both sides of the four isometry-extension formulas, evaluated independently."""
    result = SuiteResult("fock-ext")
    spec = RepSpec((1,))
    omega = spec.gp_vector()
    states: list[tuple[tuple[int, int], ...]] = []
    for p in range(0, cutoff + 1):
        for mode_set in itertools.combinations(range(1, modes + 1), p):
            for exp_combo in itertools.product(range(1, exps + 1), repeat=p):
                states.append(tuple(zip(mode_set, exp_combo)))
    for creators in states:
        state_ket = boson.apply_boson(boson.BosonMonomial(ONE, creators, ()), omega)
        for m in range(1, modes + 1):
            for star in (False, True):
                coeff, image = boson.fock_extension_action(m, star, creators)
                lhs = apply_generator(spec, m, state_ket, star=star)
                rhs = coeff * boson.apply_boson(boson.BosonMonomial(ONE, image, ()), omega)
                label = f"s{m}{'*' if star else ''} on creators {creators}"
                result.add(CheckResult(label, lhs == rhs))
    return result


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "ccr": run_ccr,
    "relations": run_relations,
    "bases": run_bases,
    "embedding": run_embedding,
    "odometer": run_odometer,
    "fock-ext": run_fock_ext,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
