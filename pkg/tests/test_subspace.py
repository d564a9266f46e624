import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from projline.errors import DimensionMismatch, EmptySubspace, NonFiniteInput
from projline.subspace import (
    Subspace,
    TolerancePolicy,
    complement_within,
    contains,
    intersect,
    orthogonal_complement,
    orthonormalize,
    principal_angles,
    project,
    subspace_equal,
    subspace_sum,
)

E = np.eye(4)


def span(*cols):
    return orthonormalize(np.column_stack(cols))


def test_policy_bounds():
    with pytest.raises(ValueError):
        TolerancePolicy(rank_tol=0.0)
    with pytest.raises(ValueError):
        TolerancePolicy(angle_tol=1.0)


def test_orthonormalize_collinear():
    e = np.eye(2)
    s = orthonormalize(np.column_stack([e[:, 0], 2 * e[:, 0]]))
    assert s.rank == 1
    assert subspace_equal(s, Subspace(e[:, :1]))


def test_orthonormalize_example_vectors():
    s = span(E[:, 0] + E[:, 2], E[:, 1] + 2 * E[:, 3])
    assert s.rank == 2
    expected = np.column_stack([(E[:, 0] + E[:, 2]) / np.sqrt(2), (E[:, 1] + 2 * E[:, 3]) / np.sqrt(5)])
    assert subspace_equal(s, Subspace(expected))


def test_orthonormalize_rank_matches_svd_oracle(rng):
    for _ in range(20):
        a = rng.standard_normal((8, 3)) @ rng.standard_normal((3, 5))
        oracle_rank = int(np.sum(np.linalg.svd(a, compute_uv=False) > 1e-9 * np.linalg.norm(a, 2)))
        s = orthonormalize(a)
        assert s.rank == oracle_rank == 3
        # every input column lies in the result
        assert np.allclose(project(s, a), a, atol=1e-12)


def test_orthonormalize_zero_and_rejects_nan():
    assert orthonormalize(np.zeros((3, 2))).rank == 0
    with pytest.raises(NonFiniteInput):
        orthonormalize(np.array([[np.nan], [1.0]]))


def test_subspace_rejects_non_orthonormal_basis():
    with pytest.raises(ValueError):
        Subspace(np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_project_examples():
    s = Subspace(np.eye(2)[:, :1])
    assert np.allclose(project(s, [3.0, 4.0]), [3.0, 0.0])
    assert np.allclose(project(Subspace.zero(2), [3.0, 4.0]), 0.0)
    b = Subspace((np.array([1.0, 0, 1, 0]) / np.sqrt(2))[:, None])
    assert np.allclose(project(b, E[:, 0]), [0.5, 0, 0.5, 0])
    with pytest.raises(DimensionMismatch):
        project(s, [1.0, 2.0, 3.0])


def test_intersect_examples():
    e3 = np.eye(3)
    got = intersect(span(e3[:, 0], e3[:, 1]), span(e3[:, 1], e3[:, 2]))
    assert subspace_equal(got, span(e3[:, 1]))
    s = span(E[:, 0], E[:, 1] + E[:, 3])
    assert subspace_equal(intersect(s, s), s)
    n = span(E[:, 0] + E[:, 2], E[:, 1] + 2 * E[:, 3])
    assert intersect(n, span(E[:, 0], E[:, 1])).rank == 0
    with pytest.raises(DimensionMismatch):
        intersect(s, span(e3[:, 0]))


def test_orthogonal_complement_examples(rng):
    c = orthogonal_complement(span(E[:, 0], E[:, 1]))
    assert subspace_equal(c, span(E[:, 2], E[:, 3]))
    assert orthogonal_complement(Subspace.zero(5)).rank == 5
    for _ in range(10):
        s = orthonormalize(rng.standard_normal((7, 3)))
        assert subspace_equal(orthogonal_complement(orthogonal_complement(s)), s)
        assert np.max(np.abs(s.basis.T @ orthogonal_complement(s).basis)) < 1e-12


def test_principal_angles_examples():
    s = span(E[:, 0], E[:, 1])
    assert np.allclose(principal_angles(s, s), 0.0, atol=1e-15)
    assert np.isclose(principal_angles(span(E[:, 0]), span(E[:, 1]))[0], np.pi / 2)
    n = span(E[:, 0] + E[:, 2], E[:, 1] + 2 * E[:, 3])
    cos = np.sort(np.cos(principal_angles(s, n)))
    assert np.allclose(cos, [1 / np.sqrt(5), 1 / np.sqrt(2)], atol=1e-14)
    with pytest.raises(EmptySubspace):
        principal_angles(s, Subspace.zero(4))


def test_principal_angles_match_scipy_oracle(rng):
    for d, r1, r2 in [(6, 2, 3), (10, 4, 4), (12, 5, 2)]:
        a, b = rng.standard_normal((d, r1)), rng.standard_normal((d, r2))
        ours = principal_angles(orthonormalize(a), orthonormalize(b))
        oracle = np.sort(scipy.linalg.subspace_angles(a, b))
        assert np.allclose(ours, oracle, atol=1e-12)


def test_small_angles_resolved_below_arccos_precision():
    # arccos(cos) cannot resolve 1e-10; the sine branch must
    theta = 1e-10
    u = Subspace(np.array([[1.0], [0.0]]))
    v = Subspace(np.array([[np.cos(theta)], [np.sin(theta)]]))
    assert np.isclose(principal_angles(u, v)[0], theta, rtol=1e-6)


def test_sum_equal_contains():
    e1, e2 = np.eye(3)[:, 0], np.eye(3)[:, 1]
    assert subspace_equal(subspace_sum(span(e1), span(e2)), span(e1, e2))
    v = E[:, 0] + E[:, 2]
    assert contains(span(v), v)
    assert not contains(span(v), E[:, 0])


def test_equal_under_basis_change(rng):
    for _ in range(20):
        b = rng.standard_normal((6, 2))
        g = rng.standard_normal((2, 2)) + 3 * np.eye(2)
        assert subspace_equal(orthonormalize(b), orthonormalize(b @ g))


def test_complement_within():
    outer = span(E[:, 0], E[:, 1], E[:, 2])
    inner = span(E[:, 0] + E[:, 1])
    got = complement_within(outer, inner)
    assert subspace_equal(got, span(E[:, 0] - E[:, 1], E[:, 2]))


@st.composite
def subspace_pairs(draw):
    d = draw(st.integers(2, 20))
    r1 = draw(st.integers(0, d))
    r2 = draw(st.integers(0, d))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    return orthonormalize(rng.standard_normal((d, r1))), orthonormalize(rng.standard_normal((d, r2))), rng


@settings(max_examples=60, deadline=None)
@given(subspace_pairs())
def test_dimension_formula(pair):
    s1, s2, _ = pair
    assert intersect(s1, s2).rank + subspace_sum(s1, s2).rank == s1.rank + s2.rank


@settings(max_examples=60, deadline=None)
@given(subspace_pairs())
def test_orthonormal_outputs_and_idempotent_projection(pair):
    s1, s2, rng = pair
    for s in (intersect(s1, s2), subspace_sum(s1, s2), orthogonal_complement(s1)):
        if s.rank:
            assert np.max(np.abs(s.basis.T @ s.basis - np.eye(s.rank))) <= s.tol
    v = rng.standard_normal(s1.ambient_dim)
    pv = project(s1, v)
    assert np.linalg.norm(project(s1, pv) - pv) <= 1e-10 * np.linalg.norm(v)


@settings(max_examples=60, deadline=None)
@given(subspace_pairs())
def test_complement_involution_and_angle_symmetry(pair):
    s1, s2, _ = pair
    assert subspace_equal(orthogonal_complement(orthogonal_complement(s1)), s1)
    if s1.rank and s1.rank == s2.rank:
        assert np.allclose(principal_angles(s1, s2), principal_angles(s2, s1), atol=1e-12)
