import math

import numpy as np
import pytest

from zksym import (
    AdaptedForm,
    DegenerateMetricError,
    InvalidParamsError,
    MetricParams,
    build_form,
    build_so5,
    check_adh_invariance,
    orthonormal_frame,
)

from oracles import sample_params


# ----------------------------------------------------------------------
# parameter validation
# ----------------------------------------------------------------------

def test_rejects_u_on_boundary():
    with pytest.raises(InvalidParamsError):
        MetricParams(1, 4, 1, 1)
    with pytest.raises(InvalidParamsError):
        MetricParams(1, -4, 1, 1)
    with pytest.raises(InvalidParamsError):
        MetricParams(0.5, 1.0, 1, 1)  # 4 t^2 = 1


@pytest.mark.parametrize("bad", [(0, 0, 1, 1), (1, 0, 0, 1), (1, 0, 1, 0)])
def test_rejects_zero_scale(bad):
    with pytest.raises(InvalidParamsError):
        MetricParams(*bad)


def test_rejects_non_finite():
    with pytest.raises(InvalidParamsError):
        MetricParams(float("nan"), 0, 1, 1)
    with pytest.raises(InvalidParamsError):
        MetricParams(1, float("inf"), 1, 1)


def test_k_value():
    p = MetricParams(1, 1, 1, 1)
    assert p.K == pytest.approx(math.sqrt(3) / 2, rel=1e-15)
    assert MetricParams(2, 0, 1, 1).K == 2.0


def test_k_guard_near_degenerate():
    # |u| within 1e-8 * 4t^2 of the boundary: K^2 < 0, the guard refuses
    with pytest.raises(DegenerateMetricError):
        MetricParams(1, 4 * (1 - 5e-9), 1, 1).K
    # anywhere past |u| = 2t^2 the form stops being positive-definite
    with pytest.raises(DegenerateMetricError):
        build_form(MetricParams(1, 3, 1, 1))
    assert MetricParams(1, 1.9, 1, 1).K > 0


# ----------------------------------------------------------------------
# build_form
# ----------------------------------------------------------------------

def test_unit_params_give_identity():
    g = build_form(MetricParams(1, 0, 1, 1)).gram
    assert np.array_equal(g, np.eye(8))


def test_mixed_entries_at_u_one():
    g = build_form(MetricParams(1, 1, 1, 1)).gram
    assert g[0, 3] == 0.5 and g[3, 0] == 0.5
    assert g[1, 2] == -0.5 and g[2, 1] == -0.5
    off = g - np.diag(np.diag(g))
    off[0, 3] = off[3, 0] = off[1, 2] = off[2, 1] = 0.0
    assert np.array_equal(off, np.zeros((8, 8)))


def test_block_structure_and_positivity():
    rng = np.random.default_rng(11)
    for _ in range(20):
        p = sample_params(rng)
        g = build_form(p).gram
        assert np.array_equal(g, g.T)
        assert np.array_equal(g[:4, 4:], np.zeros((4, 4)))
        assert np.array_equal(g[4:6, 6:], np.zeros((2, 2)))
        # A-block eigenvalues are t^2 +- u/2, each double
        eig = np.sort(np.linalg.eigvalsh(g[:4, :4]))
        t2, hu = p.t * p.t, abs(p.u) / 2
        assert eig == pytest.approx([t2 - hu, t2 - hu, t2 + hu, t2 + hu], rel=1e-12)
        assert np.all(np.linalg.eigvalsh(g) > 0)


# ----------------------------------------------------------------------
# ad(h)-invariance
# ----------------------------------------------------------------------

@pytest.mark.parametrize("params", [(1, 0, 1, 2), (2, 3, 1, 1), (1.5, -1.2, 0.7, 1.1)])
def test_adh_invariance_of_built_forms(params):
    alg = build_so5()
    report = check_adh_invariance(alg, build_form(MetricParams(*params)))
    assert report.max_residual <= 1e-12
    assert report.ok()


def test_adh_invariance_detects_tampering():
    alg = build_so5()
    g = np.array(build_form(MetricParams(1, 0, 1, 1)).gram)
    g[1, 2] = g[2, 1] = 0.3
    report = check_adh_invariance(alg, AdaptedForm(gram=g))
    assert report.max_residual > 0.1
    assert not report.ok()


def test_adh_invariance_rejects_wrong_shape():
    with pytest.raises(ValueError):
        AdaptedForm(gram=np.eye(7))


# ----------------------------------------------------------------------
# orthonormal frame
# ----------------------------------------------------------------------

def test_frame_trivial_at_unit_params():
    f = orthonormal_frame(MetricParams(1, 0, 1, 1))
    assert np.array_equal(f.matrix, np.eye(8))


def test_frame_mixing_at_u_one():
    p = MetricParams(1, 1, 1, 1)
    f = orthonormal_frame(p)
    k = math.sqrt(3) / 2
    a4 = f.vector("A~4")
    assert a4[0] == pytest.approx(-1 / (2 * k), rel=1e-15)
    assert a4[3] == pytest.approx(1 / k, rel=1e-15)
    g = build_form(p).gram
    assert a4 @ g @ a4 == pytest.approx(1.0, rel=1e-14)
    a1 = f.vector("A~1")
    assert abs(a1 @ g @ a4) < 1e-15


def test_frame_gram_congruence_is_identity():
    rng = np.random.default_rng(12)
    for _ in range(100):
        p = sample_params(rng)
        f = orthonormal_frame(p).matrix
        g = build_form(p).gram
        assert np.max(np.abs(f.T @ g @ f - np.eye(8))) < 1e-12


def test_frame_vectors_grading_homogeneous():
    # each frame vector sits inside a single grading block of m
    rng = np.random.default_rng(13)
    blocks = (slice(0, 4), slice(0, 4), slice(0, 4), slice(0, 4),
              slice(4, 6), slice(4, 6), slice(6, 8), slice(6, 8))
    for _ in range(10):
        f = orthonormal_frame(sample_params(rng)).matrix
        for j, block in enumerate(blocks):
            outside = np.delete(f[:, j], np.r_[block])
            assert np.array_equal(outside, np.zeros_like(outside))


def test_frame_refuses_near_degenerate():
    with pytest.raises(DegenerateMetricError):
        orthonormal_frame(MetricParams(1, 2.5, 1, 1))
