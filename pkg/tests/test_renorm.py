import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from eigenform.utils.forms import DirichletForm, FormDimensionError, NotIrreducibleError, ZeroFormError
from eigenform.utils.renorm import (
    DegenerateImageError, KernelMismatchError, RenormalizationOperator, Stratum, TrivialKernelError, Weights,
    WeightsError, assemble_s1, classify, eta, lambda_r, normalized_lambda, schur_complement, trace_to_boundary,
)
from eigenform.utils.triples import BUILTIN_NAMES, builtin
from tests import oracles
from tests.conftest import irreducible_forms, positive, triples_with_weights

ONES3 = Weights.ones(3)


class TestWeights:
    def test_parse(self):
        assert Weights.parse("1, 2.5,3").values == (1.0, 2.5, 3.0)

    @pytest.mark.parametrize("text", ["1,0,1", "1,-2", "a,b", "", "1,,2", "1,2,", ",1"])
    def test_rejects(self, text):
        with pytest.raises(WeightsError):
            Weights.parse(text)

    def test_count_must_match_cells(self, gasket):
        with pytest.raises(WeightsError):
            RenormalizationOperator(gasket, Weights.ones(2))


class TestAssembly:
    def test_interval_path_laplacian(self, interval):
        q = assemble_s1(interval, Weights.ones(2), DirichletForm(2, [1.0]))
        expected = np.array([[1, 0, -1], [0, 1, -1], [-1, -1, 2]], dtype=float)
        np.testing.assert_array_equal(q.matrix, expected)

    def test_zero_form(self, gasket):
        assert not np.any(assemble_s1(gasket, ONES3, DirichletForm.zero(3)).matrix)

    def test_linear_in_weights(self, gasket):
        form = DirichletForm(3, [0.2, 0.3, 0.5])
        r = Weights((1.0, 2.0, 3.0))
        np.testing.assert_allclose(
            assemble_s1(gasket, r.scaled(2.0), form).matrix, 2 * assemble_s1(gasket, r, form).matrix,
        )

    def test_energy_is_sum_over_cells(self, gasket):
        form = DirichletForm(3, [0.2, 0.3, 0.5])
        r = Weights((1.0, 2.0, 3.0))
        q = assemble_s1(gasket, r, form)
        rng = np.random.default_rng(7)
        for _ in range(20):
            v = rng.normal(size=6)
            expected = sum(w * form(v[list(row)]) for w, row in zip(r.values, gasket.cell_maps))
            assert q(v) == pytest.approx(expected, rel=1e-12)
        assert q.violations() == []

    def test_dimension_mismatch(self, gasket):
        with pytest.raises(FormDimensionError):
            assemble_s1(gasket, ONES3, DirichletForm(2, [1.0]))


class TestTrace:
    def test_no_interior_vertices(self):
        q = DirichletForm(3, [0.2, 0.3, 0.5]).laplacian().matrix
        np.testing.assert_array_equal(schur_complement(q, 3), q)

    def test_dimension_mismatch(self, gasket):
        with pytest.raises(FormDimensionError):
            trace_to_boundary(DirichletForm(3, [0.2, 0.3, 0.5]).laplacian(), gasket)

    def test_series_path(self, interval):
        reduced = trace_to_boundary(assemble_s1(interval, Weights.ones(2), DirichletForm(2, [1.0])), interval)
        np.testing.assert_allclose(reduced.matrix, [[0.5, -0.5], [-0.5, 0.5]], atol=1e-15)

    def test_tripod_pair_has_zero_trace(self, tripod):
        operator = RenormalizationOperator(tripod, ONES3)
        assert np.abs(operator.trace(DirichletForm(3, [0, 0, 1])).matrix).max() <= 1e-14


class TestLambda:
    @pytest.mark.parametrize("r1, r2", [(1.0, 1.0), (1.0, 2.0), (0.3, 7.0)])
    def test_interval_series(self, interval, r1, r2):
        image = lambda_r(interval, Weights((r1, r2)), DirichletForm(2, [1.0]))
        assert image.coeffs[0] == pytest.approx(oracles.interval_rho(r1, r2), abs=1e-14)

    def test_gasket_uniform(self, gasket):
        image = lambda_r(gasket, ONES3, DirichletForm(3, [1, 1, 1]))
        np.testing.assert_allclose(image.coeffs, [float(oracles.GASKET_RHO)] * 3, atol=1e-14)

    def test_gasket_degenerate(self, gasket, degenerate_gasket_form):
        image = lambda_r(gasket, ONES3, degenerate_gasket_form)
        np.testing.assert_allclose(image.coeffs, [float(c) for c in oracles.GASKET_DEGENERATE_IMAGE], atol=1e-14)

    def test_vicsek_uniform_is_fixed(self, vicsek):
        form = DirichletForm.uniform(4)
        image = lambda_r(vicsek, Weights.ones(5), form)
        np.testing.assert_allclose(image.coeffs, float(oracles.VICSEK_RHO) * form.coeffs, atol=1e-13)

    def test_tripod_uniform_is_fixed(self, tripod, uniform3):
        image = lambda_r(tripod, ONES3, uniform3)
        np.testing.assert_allclose(image.coeffs, float(oracles.TRIPOD_RHO) * uniform3.coeffs, atol=1e-14)

    def test_output_is_dirichlet(self, gasket):
        assert lambda_r(gasket, Weights((0.5, 1.0, 2.0)), DirichletForm(3, [0.2, 0.3, 0.5])).is_dirichlet()


class TestNormalizedLambda:
    def test_gasket_uniform(self, gasket, uniform3):
        scale, image = normalized_lambda(gasket, ONES3, uniform3)
        assert scale == pytest.approx(0.6, abs=1e-14)
        np.testing.assert_allclose(image.coeffs, uniform3.coeffs, atol=1e-14)
        assert image.norm == pytest.approx(1.0, abs=1e-15)

    def test_interval(self, interval):
        scale, image = normalized_lambda(interval, Weights.ones(2), DirichletForm(2, [1.0]))
        assert scale == pytest.approx(0.5)
        assert list(image.coeffs) == [1.0]

    def test_tripod_degenerate_image(self, tripod):
        with pytest.raises(DegenerateImageError):
            normalized_lambda(tripod, ONES3, DirichletForm(3, [0, 0, 1]))

    def test_zero_form(self, gasket):
        with pytest.raises(ZeroFormError):
            normalized_lambda(gasket, ONES3, DirichletForm.zero(3))


class TestClassify:
    @pytest.mark.parametrize("coeffs, stratum", [
        ([1 / 3, 1 / 3, 1 / 3], Stratum.D1),
        ([0.5, 0.5, 0.0], Stratum.D2),
        ([1.0, 0.0, 0.0], Stratum.D3),
    ])
    def test_gasket_strata(self, gasket, coeffs, stratum):
        form = DirichletForm(3, coeffs).normalize()[1]
        boundary = classify(gasket, ONES3, form)
        assert boundary.stratum is stratum
        assert boundary.to_dict()["on_boundary"] is (stratum is not Stratum.D1)

    def test_tripod_d4(self, tripod):
        boundary = classify(tripod, ONES3, DirichletForm(3, [0, 0, 1]))
        assert boundary.stratum is Stratum.D4
        assert boundary.components == ((0,), (1, 2))
        assert boundary.to_dict()["components"] == [[1], [2, 3]]

    def test_requires_normalized(self, gasket):
        with pytest.raises(FormDimensionError):
            classify(gasket, ONES3, DirichletForm(3, [1, 1, 1]))

    def test_cross_check_agrees(self, tripod):
        boundary = classify(tripod, ONES3, DirichletForm(3, [0, 0, 1]), cross_check=Weights((0.5, 2.0, 3.0)))
        assert boundary.cross_check_agrees is True
        assert boundary.cross_check_image_norm <= 1e-12

    def test_interior_ignores_cross_check_verdict(self, gasket, uniform3):
        boundary = classify(gasket, ONES3, uniform3, cross_check=Weights((1.0, 2.0, 3.0)))
        assert boundary.cross_check_agrees is None
        assert boundary.cross_check_image_norm > 0


class TestConstrainedForm:
    def test_irreducible_kernel_gives_zero(self, gasket, uniform3):
        operator = RenormalizationOperator(gasket, ONES3)
        constrained = operator.constrained_form(uniform3, uniform3.kernel_basis())
        assert np.abs(constrained.coordinates).max() <= 1e-14
        assert constrained.infeasible_directions == 0

    def test_gasket_degenerate_kernel(self, gasket, uniform3, degenerate_gasket_form):
        operator = RenormalizationOperator(gasket, ONES3)
        constrained = operator.constrained_form(uniform3, degenerate_gasket_form.kernel_basis())
        assert constrained.infeasible_directions == 0
        for a, b in [(1.0, 0.0), (0.3, -2.0), (5.0, 5.0)]:
            u = np.array([a, a, b])
            assert constrained.value(u) == pytest.approx(float(oracles.GASKET_CONSTRAINED) * (a - b) ** 2, abs=1e-13)

    def test_kernel_mismatch(self, gasket):
        operator = RenormalizationOperator(gasket, ONES3)
        with pytest.raises(KernelMismatchError):
            operator.constrained_form(DirichletForm.uniform(3), DirichletForm(2, [1.0]).kernel_basis())

    def test_dominates_plain_trace(self, gasket, uniform3, degenerate_gasket_form):
        operator = RenormalizationOperator(gasket, ONES3)
        constrained = operator.constrained_form(uniform3, degenerate_gasket_form.kernel_basis())
        plain = operator.lambda_r(uniform3)
        u = np.array([1.0, 1.0, -1.0])
        assert constrained.value(u) >= plain(u) - 1e-12


class TestEta:
    def test_equal_forms(self, degenerate_gasket_form, uniform3):
        result = eta(uniform3, uniform3, degenerate_gasket_form.kernel_basis())
        assert result.eta == pytest.approx(1.0)

    def test_gasket_example(self, degenerate_gasket_form, uniform3):
        form = DirichletForm(3, [0.5, 0.25, 0.25])
        result = eta(form, uniform3, degenerate_gasket_form.kernel_basis())
        assert result.eta == pytest.approx(float(oracles.GASKET_ETA), abs=1e-12)
        assert result.eta_min == pytest.approx(result.eta, abs=1e-12)
        u = result.maximizer
        assert abs(form(u) - result.eta * uniform3(u)) <= 1e-10

    def test_scaling(self, degenerate_gasket_form, uniform3):
        result = eta(2 * uniform3, uniform3, degenerate_gasket_form.kernel_basis())
        assert result.eta == pytest.approx(2.0)

    def test_trivial_kernel(self, uniform3):
        with pytest.raises(TrivialKernelError):
            eta(uniform3, uniform3, uniform3.kernel_basis())

    def test_reducible_reference(self, degenerate_gasket_form):
        with pytest.raises(NotIrreducibleError):
            eta(degenerate_gasket_form, degenerate_gasket_form, degenerate_gasket_form.kernel_basis())


class TestRatioBounds:
    def test_equal_at_eigenform(self, gasket, uniform3):
        bounds = RenormalizationOperator(gasket, ONES3).ratio_bounds(uniform3)
        assert bounds.min_ratio == pytest.approx(0.6, abs=1e-12)
        assert bounds.max_ratio == pytest.approx(0.6, abs=1e-12)


# --- property suites over the builtin triples ---

@settings(max_examples=500, deadline=None)
@given(case=triples_with_weights())
def test_markov_property(case):
    triple, weights, form = case
    operator = RenormalizationOperator(triple, weights)
    raw = operator.extract(form)
    assert raw.coeffs.min() >= -1e-10
    assert operator.lambda_r(form).is_irreducible()


@settings(max_examples=100, deadline=None)
@given(case=triples_with_weights(), c=st.floats(min_value=0.1, max_value=10.0))
def test_homogeneity(case, c):
    triple, weights, form = case
    base = lambda_r(triple, weights, form).coeffs
    np.testing.assert_allclose(lambda_r(triple, weights, c * form).coeffs, c * base, rtol=1e-10, atol=1e-13)
    np.testing.assert_allclose(lambda_r(triple, weights.scaled(c), form).coeffs, c * base, rtol=1e-10, atol=1e-13)


@settings(max_examples=50, deadline=None)
@given(case=triples_with_weights(), seed=st.integers(0, 2**32 - 1))
def test_trace_is_infimum_over_extensions(case, seed):
    triple, weights, form = case
    operator = RenormalizationOperator(triple, weights)
    s1 = operator.assemble_s1(form)
    image = operator.lambda_r(form)
    rng = np.random.default_rng(seed)
    u = rng.normal(size=triple.n_boundary)
    for _ in range(20):
        v = np.concatenate([u, rng.normal(size=triple.n_interior)])
        assert image(u) <= s1(v) * (1 + 1e-9) + 1e-10


@settings(max_examples=100, deadline=None)
@given(case=triples_with_weights(), other=st.data())
def test_cross_ratio_inequality(case, other):
    triple, weights, form = case
    second = other.draw(irreducible_forms(triple.n_boundary))
    operator = RenormalizationOperator(triple, weights)
    inf_second, _ = operator.ratio_bounds(second)
    _, sup_first = operator.ratio_bounds(form)
    assert inf_second <= sup_first * (1 + 1e-9)


@settings(max_examples=100, deadline=None)
@given(case=triples_with_weights(), seed=st.integers(0, 2**32 - 1))
def test_small_perturbations_move_the_image_little(case, seed):
    # (1 - delta) E <= E' <= (1 + delta) E as forms, likewise for r
    triple, weights, form = case
    delta = 1e-6
    rng = np.random.default_rng(seed)
    nearby_form = DirichletForm(form.n_boundary, form.coeffs * (1 + delta * rng.uniform(-1, 1, form.n_pairs)))
    nearby_weights = Weights(tuple(weights.as_array() * (1 + delta * rng.uniform(-1, 1, len(weights)))))

    image = lambda_r(triple, weights, form)
    moved = lambda_r(triple, nearby_weights, nearby_form)
    assert np.abs(moved.coeffs - image.coeffs).max() <= (10 * delta + 1e-10) * image.norm


@st.composite
def reducible_forms(draw, n_boundary: int) -> DirichletForm:
    """Forms whose positivity graph is a union of at least two cliques."""
    groups = draw(st.lists(st.integers(0, n_boundary - 1), min_size=n_boundary, max_size=n_boundary))
    assume(len(set(groups)) >= 2)
    pairs = DirichletForm.zero(n_boundary).pair_index
    coeffs = [draw(positive) if groups[j1] == groups[j2] else 0.0 for j1, j2 in pairs]
    return DirichletForm(n_boundary, coeffs)


@settings(max_examples=100, deadline=None)
@given(name=st.sampled_from(BUILTIN_NAMES), data=st.data(), seed=st.integers(0, 2**32 - 1))
def test_constrained_form_dominates_plain_trace(name, data, seed):
    triple = builtin(name)
    weights = Weights(tuple(data.draw(st.lists(positive, min_size=triple.n_cells, max_size=triple.n_cells))))
    degenerate = data.draw(reducible_forms(triple.n_boundary))
    form = data.draw(irreducible_forms(triple.n_boundary))
    operator = RenormalizationOperator(triple, weights)
    kernel = degenerate.kernel_basis()
    constrained = operator.constrained_form(form, kernel)
    plain = operator.lambda_r(form)

    rng = np.random.default_rng(seed)
    for _ in range(10):
        u = kernel.lift(rng.normal(size=kernel.dimension))
        assert constrained.value(u) >= plain(u) * (1 - 1e-9) - 1e-10
