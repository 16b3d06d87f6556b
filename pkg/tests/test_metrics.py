import numpy as np
import pytest

from swarmpp.metrics import (
    CheckpointMatrix,
    aggregate_relative_error,
    relative_error,
    win_fraction,
    winning_proportion,
)


def _cm(alg, func, values):
    values = np.asarray(values, dtype=float)
    return CheckpointMatrix(alg, func, (0,), values.reshape(-1, 1))


def test_win_fraction_strict_sweep():
    frac, ties = win_fraction([2.0, 2.0], [1.0, 1.5])
    assert frac == 1.0 and ties == 0


def test_win_fraction_all_ties():
    frac, ties = win_fraction([3.0, 3.0], [3.0, 3.0])
    assert frac == 0.5 and ties == 2


def test_win_fraction_enumerated():
    # B=(1,2,3,4) vs A=(2,2,2,2): (1 + 0.5 + 0 + 0)/4
    frac, ties = win_fraction([2.0, 2.0, 2.0, 2.0], [1.0, 2.0, 3.0, 4.0])
    assert frac == 0.375 and ties == 1


def test_winning_proportion_over_functions():
    A = [_cm("A", "f1", [2, 2, 2, 2])]
    B = [_cm("B", "f1", [1, 2, 3, 4])]
    assert winning_proportion(A, B, 0) == 0.375


def test_winning_proportion_antisymmetry():
    rng = np.random.default_rng(0)
    for _ in range(100):
        a = rng.integers(0, 5, 20).astype(float)  # integer values force ties
        b = rng.integers(0, 5, 20).astype(float)
        fa, _ = win_fraction(a, b)
        fb, _ = win_fraction(b, a)
        assert fa + fb == 1.0


def test_winning_proportion_monotone_response():
    rng = np.random.default_rng(1)
    a = rng.normal(0, 1, 30)
    b = rng.normal(0, 1, 30)
    p0, _ = win_fraction(a, b)
    worse = np.where(b > a)[0]
    if worse.size:
        b2 = b.copy()
        b2[worse[0]] = a[worse[0]] - 1.0
        p1, _ = win_fraction(a, b2)
        assert p1 >= p0


def test_winning_proportion_shape_errors():
    A = [_cm("A", "f1", [1, 2])]
    B = [_cm("B", "f2", [1, 2])]
    with pytest.raises(ValueError):
        winning_proportion(A, B, 0)
    with pytest.raises(ValueError):
        win_fraction([1.0], [1.0, 2.0])


def test_relative_error_extremes():
    assert relative_error([0, 0, 0], [1, 1, 1]) == (0.0, 1.0)


def test_relative_error_zero_range():
    assert relative_error([2.0, 2.0], [2.0, 2.0]) == (0.0, 0.0)


def test_relative_error_arithmetic():
    # pooled min 0, range 4: RE_A = (0 + 0.25)/2, RE_B = (0.5 + 1)/2
    re_a, re_b = relative_error([0.0, 1.0], [2.0, 4.0])
    assert re_a == 0.125 and re_b == 0.75


def test_relative_error_nonfinite_rejected():
    with pytest.raises(ValueError):
        relative_error([0.0, np.inf], [1.0, 2.0])


def test_relative_error_scale_invariance():
    rng = np.random.default_rng(2)
    a = rng.normal(3, 2, 50)
    b = rng.normal(3.5, 2, 50)
    base = relative_error(a, b)
    for _ in range(100):
        c = rng.uniform(1e-6, 1e6)
        scaled = relative_error(c * a, c * b)
        assert abs(scaled[0] - base[0]) < 1e-12
        assert abs(scaled[1] - base[1]) < 1e-12


def test_relative_error_shift_invariance():
    rng = np.random.default_rng(3)
    a = rng.normal(0, 1, 40)
    b = rng.normal(0, 1, 40)
    base = relative_error(a, b)
    for shift in (-100.0, -1.0, 5.0, 1e4):
        shifted = relative_error(a + shift, b + shift)
        assert abs(shifted[0] - base[0]) < 1e-9
        assert abs(shifted[1] - base[1]) < 1e-9


def test_aggregate_relative_error():
    assert aggregate_relative_error([0.2, 0.2, 0.2]) == pytest.approx(0.2)
    assert aggregate_relative_error([0.0, 1.0]) == 0.5
    assert aggregate_relative_error([0.125, 0.75, 0.1]) == pytest.approx(0.325)
    with pytest.raises(ValueError):
        aggregate_relative_error([])


def test_checkpoint_matrix_validation():
    with pytest.raises(ValueError):
        CheckpointMatrix("A", "f", (0, 1), np.zeros((3, 3)))
