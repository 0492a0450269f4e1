import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eigenform.utils.forms import (
    DenominatorDegenerateError, DirichletForm, FormDimensionError, FormError, FormKernel, NotIrreducibleError,
    QuadraticFormMatrix, ZeroFormError, coefficients_from_form, comparability, dump_form, load_form,
    rayleigh_bounds,
)
from tests import oracles
from tests.conftest import fixture_path, irreducible_forms


class TestEval:
    def test_direct_sum(self):
        assert DirichletForm(3, [1, 1, 1]).eval([0, 1, 2]) == pytest.approx(6.0)

    def test_constant_has_no_energy(self):
        assert DirichletForm(3, [0.2, 0.3, 0.5])([4.0, 4.0, 4.0]) == 0.0

    def test_single_pair(self):
        assert DirichletForm(2, [2.5])([1.0, -1.0]) == pytest.approx(10.0)

    def test_length_mismatch(self):
        with pytest.raises(FormDimensionError):
            DirichletForm(3, [1, 1, 1]).eval([1.0, 2.0])


class TestConstruction:
    def test_wrong_coefficient_count(self):
        with pytest.raises(FormDimensionError):
            DirichletForm(3, [1.0, 2.0])

    def test_non_finite(self):
        with pytest.raises(FormError):
            DirichletForm(2, [float("nan")])

    def test_from_coeffs_requires_nonnegative(self):
        with pytest.raises(FormError):
            DirichletForm.from_coeffs(3, [1.0, -0.1, 0.0])

    def test_coefficients_are_read_only(self):
        form = DirichletForm(2, [1.0])
        with pytest.raises(ValueError):
            form.coeffs[0] = 2.0


class TestLaplacian:
    def test_two_vertices(self):
        np.testing.assert_array_equal(DirichletForm(2, [1.0]).laplacian().matrix, [[1, -1], [-1, 1]])

    def test_triangle(self):
        expected = np.array([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], dtype=float)
        np.testing.assert_array_equal(DirichletForm(3, [1, 1, 1]).laplacian().matrix, expected)

    @settings(max_examples=100, deadline=None)
    @given(form=irreducible_forms(4), u=st.lists(st.floats(-10, 10), min_size=4, max_size=4))
    def test_matches_direct_sum(self, form, u):
        assert form.laplacian()(u) == pytest.approx(form.eval(u), rel=1e-12, abs=1e-12)

    def test_validate(self):
        assert DirichletForm(3, [0.2, 0.3, 0.5]).laplacian().validate().violations() == []
        with pytest.raises(FormError):
            QuadraticFormMatrix(np.array([[1.0, 0.0], [0.0, 1.0]])).validate()


class TestPolarization:
    def test_recovers_coefficients(self):
        form = DirichletForm(3, [0.2, 0.3, 0.5])
        recovered = coefficients_from_form(form.eval, 3)
        np.testing.assert_allclose(recovered.coeffs, form.coeffs, atol=1e-12)

    def test_zero_form(self):
        assert np.all(coefficients_from_form(lambda u: 0.0, 4).coeffs == 0)

    @settings(max_examples=100, deadline=None)
    @given(form=irreducible_forms(5))
    def test_roundtrip(self, form):
        np.testing.assert_allclose(coefficients_from_form(form.laplacian(), 5).coeffs, form.coeffs, atol=1e-12)


class TestComponents:
    def test_complete(self):
        assert DirichletForm(3, [1, 1, 1]).positivity_graph_components() == [(0, 1, 2)]

    def test_isolated_vertex(self):
        assert DirichletForm(3, [1, 0, 0]).positivity_graph_components() == [(0, 1), (2,)]

    def test_path(self):
        form = DirichletForm(3, [1, 1, 0])
        assert form.positivity_graph_components() == [(0, 1, 2)]
        assert form.is_irreducible()

    def test_kernel_dimensions(self):
        assert DirichletForm(3, [1, 1, 1]).kernel_basis().dimension == 1
        assert DirichletForm.zero(4).kernel_basis().dimension == 4

    def test_kernel_of_reducible_form(self):
        form = DirichletForm(3, [1, 0, 0])
        kernel = form.kernel_basis()
        assert kernel.dimension == 2
        np.testing.assert_allclose(kernel.basis.T @ kernel.basis, np.eye(2), atol=1e-15)
        for column in kernel.basis.T:
            assert form(column) <= 1e-12
        assert kernel.contains([1.0, 1.0, 1.0])
        assert kernel.contains([0.0, 0.0, 1.0])
        assert not kernel.contains([1.0, 0.0, 0.0])

    def test_kernel_component_owner(self):
        kernel = FormKernel.from_components(4, [(0, 2), (1,), (3,)])
        assert kernel.component_of() == [0, 1, 0, 2]


class TestRayleigh:
    def test_identity_pencil(self):
        q = DirichletForm(3, [0.2, 0.3, 0.5]).laplacian()
        assert tuple(rayleigh_bounds(q, q)) == pytest.approx((1.0, 1.0))

    def test_scaling(self):
        q = DirichletForm(3, [0.2, 0.3, 0.5]).laplacian()
        assert tuple(rayleigh_bounds(q.scaled(2.0), q)) == pytest.approx((2.0, 2.0))

    def test_star_against_triangle(self):
        bounds = rayleigh_bounds(DirichletForm(3, [1, 1, 0]).laplacian(), DirichletForm(3, [1, 1, 1]).laplacian())
        low, high = oracles.K3_STAR_BOUNDS
        assert bounds.min_ratio == pytest.approx(float(low), abs=1e-12)
        assert bounds.max_ratio == pytest.approx(float(high), abs=1e-12)

    def test_singular_denominator(self):
        reducible = DirichletForm(3, [1, 0, 0]).laplacian()
        with pytest.raises(DenominatorDegenerateError):
            rayleigh_bounds(reducible, reducible)

    def test_constant_subspace(self):
        q = DirichletForm(3, [1, 1, 1]).laplacian()
        with pytest.raises(DenominatorDegenerateError):
            rayleigh_bounds(q, q, subspace=np.ones((3, 1)))

    def test_extremizers_attain_bounds(self):
        num = DirichletForm(3, [1, 1, 0]).laplacian()
        den = DirichletForm(3, [1, 1, 1]).laplacian()
        bounds = rayleigh_bounds(num, den)
        assert num(bounds.maximizer) == pytest.approx(bounds.max_ratio * den(bounds.maximizer))
        assert num(bounds.minimizer) == pytest.approx(bounds.min_ratio * den(bounds.minimizer))


class TestComparability:
    def test_equal_forms(self):
        form = DirichletForm(3, [0.2, 0.3, 0.5])
        assert comparability(form, form) == pytest.approx((1.0, 1.0))

    def test_multiple(self):
        form = DirichletForm(3, [0.2, 0.3, 0.5])
        assert comparability(form, 3 * form) == pytest.approx((3.0, 3.0))

    def test_gasket_pair(self):
        c, c_prime = comparability(DirichletForm(3, [1, 1, 1]), DirichletForm(3, [1, 1, 0]))
        assert (c, c_prime) == pytest.approx((1 / 3, 1.0))

    def test_reducible_rejected(self):
        with pytest.raises(NotIrreducibleError):
            comparability(DirichletForm(3, [1, 1, 1]), DirichletForm(3, [1, 0, 0]))

    @settings(max_examples=200, deadline=None)
    @given(e1=irreducible_forms(4), e2=irreducible_forms(4),
           u=st.lists(st.floats(-5, 5), min_size=4, max_size=4))
    def test_two_sided_bound(self, e1, e2, u):
        c, c_prime = comparability(e1, e2)
        assert c > 0
        assert c * e1(u) <= e2(u) * (1 + 1e-10) + 1e-12
        assert e2(u) <= c_prime * e1(u) * (1 + 2e-10) + 1e-12


class TestNormalize:
    def test_scale(self):
        total, form = DirichletForm(3, [2, 2, 2]).normalize()
        assert total == 6.0
        np.testing.assert_allclose(form.coeffs, [1 / 3] * 3)
        assert form.norm == pytest.approx(1.0, abs=1e-15)

    def test_vertex(self):
        total, form = DirichletForm(3, [1, 0, 0]).normalize()
        assert total == 1.0
        assert list(form.coeffs) == [1.0, 0.0, 0.0]

    def test_zero(self):
        with pytest.raises(ZeroFormError):
            DirichletForm.zero(3).normalize()

    @settings(max_examples=200, deadline=None)
    @given(form=irreducible_forms(4))
    def test_largest_coefficient_bound(self, form):
        assert form.norm == pytest.approx(1.0, abs=1e-15)
        assert form.coeffs.max() >= form.pair_index.m_tilde


class TestFiles:
    def test_load(self):
        form = load_form(fixture_path("gasket_skewed_form.json"))
        assert list(form.coeffs) == [0.2, 0.3, 0.5]

    def test_dump_then_load(self, tmp_path):
        form = DirichletForm(4, [0.1, 0.2, 0.3, 0.15, 0.05, 0.2])
        path = tmp_path / "form.json"
        dump_form(form, str(path))
        assert load_form(str(path)) == form

    def test_missing_keys(self, tmp_path):
        path = tmp_path / "form.json"
        path.write_text('{"coeffs": [1]}')
        with pytest.raises(FormError):
            load_form(str(path))
