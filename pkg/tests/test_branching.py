import itertools
import random

import pytest

from cuntzboson.boson import BosonMonomial, apply_boson
from cuntzboson.branching import (basis_lambda_j, basis_onetwov,
                                  basis_typej, classify_vacuum, component_of,
                                  cyclicity_witness, enumerate_components,
                                  enumerate_labels, inequivalence_witness,
                                  vacuum_orthogonality)
from cuntzboson.common import DomainError
from cuntzboson.cuntz import RepSpec
from cuntzboson.scalar import ONE, inv_sqrt_nat, sqrt_nat
from cuntzboson.states import Ket
from cuntzboson.words import EPWord


def test_enumerate_components_examples():
    assert [c.vacuum_label for c in enumerate_components(RepSpec((1,)))] == [EPWord((), (1,))]
    comps = enumerate_components(RepSpec((1, 2)))
    assert [c.vacuum_label for c in comps] == [EPWord((), (1, 2)), EPWord((), (2, 1))]
    assert [c.classification for c in comps] == ["F_12", "F_21"]
    comps = enumerate_components(RepSpec((3,)))
    assert [c.classification for c in comps] == ["F_3"]


def test_classification_rows_are_verified():
    name, checks = classify_vacuum(EPWord((), (2,)), modes=6)
    assert name == "F_2"
    assert sum("a" in c.name and "a*" not in c.name for c in checks) >= 6
    assert all(c.passed for c in checks)
    assert any("= 2 vac" in c.name for c in checks)

    name, checks = classify_vacuum(EPWord((), (1, 2)), modes=6)
    assert name == "F_12"
    assert any(c.name == "a1 vac = 0" for c in checks)
    assert any(c.name == "a2* a2 vac = vac" for c in checks)

    name, checks = classify_vacuum(EPWord((), (1,)), modes=6)
    assert name == "Fock"
    assert any(c.name.startswith("a1 vac = 0") for c in checks)

    name, checks = classify_vacuum(EPWord((), (1, 1, 2)), modes=6)
    assert name == "periodic(1,1,2)"
    assert all(c.passed for c in checks)


def test_general_pattern_number_eigenvalues():
    name, checks = classify_vacuum(EPWord((), (3, 1)), modes=4)
    assert name == "periodic(3,1)"
    assert any("a1* a1 vac = 2 vac" in c.name for c in checks)


def test_cyclicity_witness_examples():
    fock = enumerate_components(RepSpec((1,)))[0]
    target = EPWord((2, 3), (1,))
    witness = cyclicity_witness(fock, target)
    assert witness == BosonMonomial(ONE, {1: 1, 2: 2}, {})
    image = apply_boson(witness, Ket.basis(fock.vacuum_label))
    assert image == sqrt_nat(2) * Ket.basis(target)

    comp12 = enumerate_components(RepSpec((1, 2)))[0]
    target = EPWord((1, 1), (1, 2))
    witness = cyclicity_witness(comp12, target)
    assert witness == BosonMonomial(ONE, {}, {2: 1})
    assert apply_boson(witness, Ket.basis(comp12.vacuum_label)) == Ket.basis(target)

    assert cyclicity_witness(fock, fock.vacuum_label) == BosonMonomial.identity()

    with pytest.raises(DomainError):
        cyclicity_witness(fock, EPWord((), (2,)))


def test_cyclicity_witness_sweep():
    rng = random.Random(47)
    comps = enumerate_components(RepSpec((1, 2)))
    for _ in range(50):
        prefix = tuple(rng.randint(1, 5) for _ in range(rng.randint(0, 4)))
        phase = rng.choice(((1, 2), (2, 1)))
        target = EPWord(prefix, phase)
        comp = component_of(comps, target)
        assert comp is not None
        image = apply_boson(cyclicity_witness(comp, target), Ket.basis(comp.vacuum_label))
        assert image.labels() == [target]
        assert not image.amplitude(target).is_zero()


def brute_labels(j, bound):
    seen = set()
    for length in range(0, bound + 1):
        for prefix in itertools.product(range(1, bound + 1), repeat=length):
            seen.add(EPWord(prefix, (j,)))
    return seen


def test_basis_lambda_examples():
    assert basis_lambda_j(1, 1) == [EPWord((), (1,))]
    got = basis_lambda_j(1, 2)
    assert set(got) == {EPWord((), (1,)), EPWord((2,), (1,)),
                        EPWord((1, 2), (1,)), EPWord((2, 2), (1,))}
    assert set(got) == brute_labels(1, 2)
    got = basis_lambda_j(2, 1)
    assert set(got) == {EPWord((), (2,)), EPWord((1,), (2,))}
    assert set(got) == brute_labels(2, 1)


def test_basis_lambda_matches_enumeration():
    for j, bound in ((1, 3), (2, 3)):
        assert set(basis_lambda_j(j, bound)) == brute_labels(j, bound)
        assert set(basis_lambda_j(j, bound)) == set(
            enumerate_labels(RepSpec((j,)), bound, bound))


def test_typej_normalizers():
    family = dict((m.key(), norm) for m, norm in basis_typej(1, 2, 2))
    assert family[(((1, 2),), ())] == inv_sqrt_nat(2)
    assert all(not key[1] for key in family)  # j = 1 never lowers
    family = dict((m.key(), norm) for m, norm in basis_typej(2, 2, 2))
    assert family[((), ((1, 1),))] == ONE
    assert family[(((1, 1),), ())] == inv_sqrt_nat(2)
    # oracle for the last: |a_1* vac|^2 = 2 over the cycle-(2) vacuum
    vac = Ket.basis(EPWord((), (2,)))
    from cuntzboson.boson import apply_create
    assert apply_create(1, vac).norm_squared() == ONE + ONE


def test_typej_orthonormal_small():
    for j in (1, 2, 3):
        vac = Ket.basis(EPWord((), (j,)))
        kets = [norm * apply_boson(m, vac) for m, norm in basis_typej(j, 3, 2)]
        for i, u in enumerate(kets):
            assert u.norm_squared() == ONE
            for v in kets[i + 1:]:
                assert u.inner(v).is_zero()


def test_onetwov_normalizers_and_orthonormality():
    family = dict((m.key(), norm) for m, norm in basis_onetwov(2, 2))
    assert family[(((1, 2),), ())] == inv_sqrt_nat(2)
    assert family[(((2, 1),), ())] == inv_sqrt_nat(2)
    assert family[((), ((2, 1),))] == ONE
    vac = Ket.basis(EPWord((), (1, 2)))
    kets = [norm * apply_boson(m, vac) for m, norm in basis_onetwov(3, 2)]
    for i, u in enumerate(kets):
        assert u.norm_squared() == ONE
        for v in kets[i + 1:]:
            assert u.inner(v).is_zero()


def test_vacuum_orthogonality_relations():
    for j in (2, 3):
        checks = vacuum_orthogonality(j, 3, 3)
        assert checks and all(c.passed for c in checks)


def test_partition_into_components():
    spec = RepSpec((1, 2))
    comps = enumerate_components(spec)
    for label in enumerate_labels(spec, 3, 4):
        hits = [c for c in comps if c.vacuum_label.tail_equivalent(label)]
        assert len(hits) == 1
    spec = RepSpec((1, 1, 2))
    comps = enumerate_components(spec)
    for label in enumerate_labels(spec, 3, 3):
        hits = [c for c in comps if c.vacuum_label.tail_equivalent(label)]
        assert len(hits) == 1


def test_inequivalence_witnesses():
    f12, f21 = enumerate_components(RepSpec((1, 2)))
    report = inequivalence_witness(f12, f21, sample_size=30, seed=5)
    assert report.distinct and report.first_difference_mode == 1
    assert report.eigenvalues_first[:4] == (1, 2, 1, 2)
    assert report.eigenvalues_second[:4] == (2, 1, 2, 1)
    assert report.orthogonality_samples == 30
    assert report.ok

    f1 = enumerate_components(RepSpec((1,)))[0]
    f2 = enumerate_components(RepSpec((2,)))[0]
    report = inequivalence_witness(f1, f2)
    assert report.distinct and report.first_difference_mode == 1
    assert report.orthogonality_samples == 0  # different ambient representations
    assert report.ok

    with pytest.raises(DomainError):
        inequivalence_witness(f1, f1)


def test_component_of_rejects_foreign_labels():
    comps = enumerate_components(RepSpec((1, 2)))
    assert component_of(comps, EPWord((), (3,))) is None
