import numpy as np
import pytest

from kreinkit import gens
from kreinkit.errors import NotAnExtension, NotSolvable
from kreinkit.quasicontraction import (
    SymmetricColumn,
    extremal_extensions,
    is_member,
    krein_uniqueness_criterion,
    solvable,
    split_counts,
    uniqueness_gap,
)
from kreinkit.spectral import loewner_leq, norm2, symmetrize


def nu_minus(matrix, scale_floor=1.0, threshold=1e-9):
    w = np.linalg.eigvalsh(symmetrize(np.atleast_2d(matrix)))
    scale = max(scale_floor, abs(w).max() if w.size else 0.0)
    return int(np.sum(w < -threshold * scale))


def column(t11, t21):
    head = np.atleast_2d(np.asarray(t11, dtype=float))
    coupling = np.asarray(t21, dtype=float).reshape(-1, head.shape[0])
    return SymmetricColumn(head, coupling)


def test_split_counts_examples():
    assert split_counts(np.diag([2.0, -3.0, 0.0])) == (1, 1)
    assert split_counts(np.zeros((2, 2))) == (0, 0)
    assert split_counts(np.diag([0.5, -0.5])) == (0, 0)


def test_split_counts_property():
    rng = np.random.default_rng(40)
    for _ in range(150):
        n = int(rng.integers(1, 9))
        t = gens.random_symmetric(rng, n, scale=rng.uniform(0.3, 1.5))
        minus, plus = split_counts(t)
        direct = nu_minus(np.eye(n) - t @ t, scale_floor=(1.0 + norm2(t)) ** 2)
        assert minus + plus == direct


def test_solvable_examples():
    assert solvable(column([[2.0]], [[0.0]]))
    assert not solvable(column([[0.0]], [[2.0]]))
    assert solvable(column([[0.3]], np.zeros((0, 1))))


def test_extremal_worked_examples():
    pair = extremal_extensions(column([[0.0]], [[0.0]]))
    assert np.allclose(pair.t_min, np.diag([0.0, -1.0]))
    assert np.allclose(pair.t_max, np.diag([0.0, 1.0]))

    pair = extremal_extensions(column([[2.0]], [[0.0]]))
    assert np.allclose(pair.t_min, np.diag([2.0, -1.0]))
    assert np.allclose(pair.t_max, np.diag([2.0, 1.0]))
    assert (pair.kappa, pair.kappa_plus, pair.kappa_minus) == (1, 1, 0)

    pair = extremal_extensions(column([[0.0]], [[1.0]]))
    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    assert np.allclose(pair.t_min, swap)
    assert np.allclose(pair.t_max, swap)


def test_extremal_not_solvable():
    with pytest.raises(NotSolvable):
        extremal_extensions(column([[0.0]], [[2.0]]))


def test_is_member_examples():
    pair = extremal_extensions(column([[0.0]], [[0.0]]))
    assert is_member(pair, pair.t_min)
    assert is_member(pair, pair.t_max)
    assert is_member(pair, (pair.t_min + pair.t_max) / 2.0)
    for t in (-1.0, -0.4, 0.0, 0.8, 1.0):
        assert is_member(pair, np.diag([0.0, t]))
    for t in (-1.7, 1.2):
        assert not is_member(pair, np.diag([0.0, t]))
    with pytest.raises(NotAnExtension):
        is_member(pair, np.diag([0.5, 0.0]))


def test_uniqueness_gap_examples():
    pair = extremal_extensions(column([[0.0]], [[0.0]]))
    assert np.allclose(uniqueness_gap(pair), np.diag([0.0, 2.0]))
    pair = extremal_extensions(column([[0.0]], [[1.0]]))
    assert norm2(uniqueness_gap(pair)) <= 1e-12


def test_uniqueness_gap_is_psd():
    rng = np.random.default_rng(41)
    for _ in range(40):
        n1 = int(rng.integers(1, 5))
        n2 = int(rng.integers(0, 3))
        pair = extremal_extensions(gens.random_quasicontraction_column(rng, n1, n2))
        gap = uniqueness_gap(pair)
        assert loewner_leq(np.zeros_like(gap), gap)


def test_krein_uniqueness_examples():
    assert krein_uniqueness_criterion(column([[0.0]], [[1.0]]))
    assert not krein_uniqueness_criterion(column([[0.0]], [[0.5]]))
    # no defect space at all: vacuously unique
    assert krein_uniqueness_criterion(column([[0.3]], np.zeros((0, 1))))


def test_sup_ratio_probe_separates_unique_case():
    # the ratio |(T1 f, phi)|^2 / |((I - T1^T T1) f, f)| stays bounded along
    # the probe sequence when two distinct extremes exist, and blows up in
    # the unique case
    from kreinkit.spectral import modulus_power

    def ratio_at(col, eps, phi_tail):
        t1 = col.stacked()
        n1 = col.dim1
        m = symmetrize(np.eye(n1) - t1.T @ t1)
        abs_m = modulus_power(m, 1.0)
        phi = np.concatenate([np.zeros(n1), phi_tail])
        f = np.linalg.solve(abs_m + eps * np.eye(n1), t1.T @ phi)
        numerator = float(t1 @ f @ phi) ** 2
        denominator = abs(float(m @ f @ f))
        return numerator / max(denominator, 1e-300)

    unique = column([[0.0]], [[1.0]])
    bounded = column([[0.0]], [[0.6]])
    phi = np.array([1.0])
    assert ratio_at(unique, 1e-6, phi) > 1e6
    assert ratio_at(bounded, 1e-6, phi) < 1e3
    assert ratio_at(bounded, 1e-6, phi) == pytest.approx(
        ratio_at(bounded, 1e-2, phi), rel=1e-2
    )


def test_membership_matches_index_characterization():
    rng = np.random.default_rng(42)
    for _ in range(25):
        n1 = int(rng.integers(1, 5))
        n2 = int(rng.integers(1, 3))
        col = gens.random_quasicontraction_column(rng, n1, n2)
        pair = extremal_extensions(col)
        eye = np.eye(n1 + n2)
        for t in np.linspace(-2.5, 2.5, 21):
            full = np.block([
                [col.t11, col.t21.T],
                [col.t21, float(t) * np.eye(n2)],
            ])
            floor = (1.0 + norm2(full)) ** 2
            below = nu_minus(eye + full, scale_floor=floor)
            above = nu_minus(eye - full, scale_floor=floor)
            expected = below == pair.kappa_minus and above == pair.kappa_plus
            assert is_member(pair, full) == expected


def test_negation_duality():
    rng = np.random.default_rng(43)
    for _ in range(40):
        col = gens.random_quasicontraction_column(
            rng, int(rng.integers(1, 5)), int(rng.integers(0, 3))
        )
        pair = extremal_extensions(col)
        negated = extremal_extensions(col.negated())
        scale = 1.0 + norm2(pair.t_min) + norm2(pair.t_max)
        assert norm2(negated.t_min + pair.t_max) <= 1e-9 * scale
        assert norm2(negated.t_max + pair.t_min) <= 1e-9 * scale


def test_nonsolvable_columns_admit_no_extension():
    rng = np.random.default_rng(44)
    found = 0
    while found < 10:
        n1 = int(rng.integers(1, 4))
        n2 = int(rng.integers(1, 3))
        t11 = gens.random_symmetric(rng, n1, scale=0.8)
        t21 = rng.standard_normal((n2, n1)) * 2.0
        col = SymmetricColumn(t11, t21)
        if solvable(col):
            continue
        found += 1
        kappa = nu_minus(np.eye(n1) - t11 @ t11, scale_floor=(1.0 + norm2(t11)) ** 2)
        eye = np.eye(n1 + n2)
        for t in np.linspace(-3.0, 3.0, 13):
            full = np.block([
                [t11, t21.T],
                [t21, float(t) * np.eye(n2)],
            ])
            floor = (1.0 + norm2(full)) ** 2
            assert nu_minus(eye - full @ full, scale_floor=floor) > kappa
