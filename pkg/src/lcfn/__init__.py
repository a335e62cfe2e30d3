"""LC-functions, FC-functions and the Eulerian/Dirichlet tools used to check them."""
from .errors import AccuracyError, CapabilityError, DomainError, LcfnError, RangeError
from .numerics_types import EvalResult, QuadratureSpec
from .series_core import (
    Parity,
    SeriesFunction,
    StructuralConstants,
    alpha_transform,
    c_from_p,
    c_polynomial,
    detect_parity,
    eval_f,
    eval_modulator,
    p_from_c,
    structural_constants,
    underline,
)
from .gen_exp import OmegaDomain, generalized_pow
from .lc_fc import (
    LcEvaluator,
    fc_at_positive_int,
    fc_left_halfplane,
    functional_equation_residual,
    functional_equation_sides,
    lc_at_nonpositive_int,
    lc_integral,
    lc_series,
    residue_at_one,
)
from .numerics import (
    bernoulli_exact,
    bernoulli_numbers,
    bernoulli_polynomial,
    gamma_complex,
    hurwitz_zeta,
    integrate_halfline,
    periodic_zeta,
    rgamma,
)
from .eulerian import cot_derivative, eulerian_number, eulerian_polynomial, k_function, partial_fraction_sum
from .worked_examples import (
    ExampleKind,
    ExampleTag,
    example_evaluator,
    example_l,
    integral_cos_closed,
    integral_sinh_closed,
    l_even_closed,
    l_odd_closed,
    make_example,
)
from .dirichlet import (
    CharacterGroup,
    DirichletCharacter,
    character,
    characters_mod,
    conductor,
    dirichlet_functional_residual,
    gauss_sum,
    generalized_bernoulli,
    hurwitz_formula_sides,
    l_series,
    l_value_alkan,
    l_value_classical,
    l_value_cot,
    l_via_hurwitz,
)

__version__ = "0.1.0"
