import math

import numpy as np
import pytest

from swarmpack.model import (
    Hyperparameters,
    InvalidInputError,
    ProblemInstance,
    occupation_rate,
    validate_hyperparameters,
    validate_instance,
)


def small_instance(name="toy"):
    return ProblemInstance(name, radii=[3.0, 4.0], masses=[1.0, 2.0])


def test_instance_arrays_are_float_and_read_only():
    inst = ProblemInstance("a", radii=[1, 2], masses=[3, 4])
    assert inst.radii.dtype == np.float64
    assert inst.masses.dtype == np.float64
    with pytest.raises(ValueError):
        inst.radii[0] = 9.0
    with pytest.raises(ValueError):
        inst.masses[0] = 9.0


def test_instance_equality_and_circles_round_trip():
    a = small_instance()
    b = ProblemInstance("toy", radii=(3.0, 4.0), masses=(1.0, 2.0))
    assert a == b
    assert hash(a) == hash(b)
    assert a != ProblemInstance("toy", radii=(3.0, 4.0), masses=(1.0, 3.0))
    assert list(a.circles()) == [(3.0, 1.0), (4.0, 2.0)]
    assert a.n == 2


def test_validate_instance_accepts_good_input():
    assert validate_instance(small_instance()) == []


def test_validate_instance_flags_each_defect():
    bad_name = ProblemInstance("", radii=[1.0], masses=[1.0])
    assert any("name" in msg for msg in validate_instance(bad_name))

    spacey = ProblemInstance("two words", radii=[1.0], masses=[1.0])
    assert any("name" in msg for msg in validate_instance(spacey))

    mismatched = ProblemInstance("a", radii=[1.0, 2.0], masses=[1.0])
    assert any("equal length" in msg for msg in validate_instance(mismatched))

    zero_r = ProblemInstance("a", radii=[0.0], masses=[1.0])
    assert any("radius" in msg for msg in validate_instance(zero_r))

    neg_m = ProblemInstance("a", radii=[1.0], masses=[-2.0])
    assert any("mass" in msg for msg in validate_instance(neg_m))

    nan_r = ProblemInstance("a", radii=[math.nan], masses=[1.0])
    assert any("finite" in msg for msg in validate_instance(nan_r))

    planar = ProblemInstance("a", radii=np.ones((2, 2)), masses=np.ones(4))
    assert any("1-D" in msg for msg in validate_instance(planar))

    empty = ProblemInstance("a", radii=[], masses=[])
    assert any("at least one" in msg for msg in validate_instance(empty))


def test_occupation_rate_examples():
    inst = small_instance()
    # Circle areas sum to pi*(9+16); a container of radius 5 is filled exactly.
    assert occupation_rate(inst, 5.0) == pytest.approx(1.0, rel=1e-15)
    assert occupation_rate(inst, 10.0) == pytest.approx(0.25, rel=1e-15)


def test_occupation_rate_monotone_in_container_radius():
    inst = small_instance()
    radii = np.linspace(2.0, 40.0, 30)
    rates = [occupation_rate(inst, float(r)) for r in radii]
    assert all(a > b for a, b in zip(rates, rates[1:]))


def test_occupation_rate_rejects_nonpositive_container():
    with pytest.raises(InvalidInputError):
        occupation_rate(small_instance(), 0.0)
    with pytest.raises(InvalidInputError):
        occupation_rate(small_instance(), -1.0)


def test_hyperparameters_defaults_validate():
    hp = Hyperparameters()
    assert validate_hyperparameters(hp) == []
    assert hp.n_it == 20000
    assert hp.s_min < hp.s_max


def test_resolved_overlap_tol_scales_with_smallest_circle():
    hp = Hyperparameters()
    inst = small_instance()
    assert hp.resolved_overlap_tol(inst) == pytest.approx(1e-6 * math.pi * 9.0, rel=1e-12)
    explicit = Hyperparameters(overlap_tol=0.5)
    assert explicit.resolved_overlap_tol(inst) == 0.5
    # Zero is a valid explicit tolerance, not a missing one.
    assert Hyperparameters(overlap_tol=0.0).resolved_overlap_tol(inst) == 0.0


def test_validate_hyperparameters_flags_bad_values():
    assert validate_hyperparameters(Hyperparameters(v_max=0.0))
    assert validate_hyperparameters(Hyperparameters(f_max=-1.0))
    assert validate_hyperparameters(Hyperparameters(s_max=0.5, s_min=0.7))
    assert validate_hyperparameters(Hyperparameters(n_it=0))
    assert validate_hyperparameters(Hyperparameters(n_it=2.5))
    assert validate_hyperparameters(Hyperparameters(n_it=True))
    assert validate_hyperparameters(Hyperparameters(seed=-1))
    assert validate_hyperparameters(Hyperparameters(dt=0.0))
    assert validate_hyperparameters(Hyperparameters(epsilon=0.0))
    assert validate_hyperparameters(Hyperparameters(overlap_tol=-1e-9))
    assert validate_hyperparameters(Hyperparameters(alpha=-5.0))
    assert validate_hyperparameters(Hyperparameters(c=0.0))
