import os

import numpy as np
import pytest
from hypothesis import strategies as st

from eigenform.utils.forms import DirichletForm
from eigenform.utils.renorm import Weights
from eigenform.utils.triples import BUILTIN_NAMES, builtin

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


@pytest.fixture
def fixtures_dir() -> str:
    return FIXTURES


@pytest.fixture
def interval():
    return builtin("interval")


@pytest.fixture
def gasket():
    return builtin("gasket")


@pytest.fixture
def tripod():
    return builtin("tripod")


@pytest.fixture
def vicsek():
    return builtin("vicsek")


@pytest.fixture
def uniform3() -> DirichletForm:
    return DirichletForm.uniform(3)


@pytest.fixture
def degenerate_gasket_form() -> DirichletForm:
    return DirichletForm(3, [1.0, 0.0, 0.0])


# --- hypothesis strategies ---

positive = st.floats(min_value=0.1, max_value=10.0, allow_nan=False, allow_infinity=False)


@st.composite
def irreducible_forms(draw, n_boundary: int) -> DirichletForm:
    """Normalized forms with every coefficient positive."""
    n_pairs = n_boundary * (n_boundary - 1) // 2
    coeffs = np.array(draw(st.lists(positive, min_size=n_pairs, max_size=n_pairs)))
    return DirichletForm(n_boundary, coeffs).normalize()[1]


@st.composite
def triples_with_weights(draw):
    """A builtin triple, positive weights and an irreducible normalized form."""
    triple = builtin(draw(st.sampled_from(BUILTIN_NAMES)))
    values = draw(st.lists(positive, min_size=triple.n_cells, max_size=triple.n_cells))
    form = draw(irreducible_forms(triple.n_boundary))
    return triple, Weights(tuple(values)), form


@st.composite
def slice_points(draw, n: int, spread: float = 1.5) -> np.ndarray:
    """Points of the affine slice sum = 1, some outside the simplex."""
    free = draw(st.lists(
        st.floats(min_value=-spread / n, max_value=spread, allow_nan=False, allow_infinity=False),
        min_size=n - 1, max_size=n - 1,
    ))
    return np.array(free + [1.0 - sum(free)])
