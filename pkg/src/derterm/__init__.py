"""Standard and derived-term automata of weighted rational expressions over graded monoids."""
from .semiring import BOOLEAN, INTEGER, MINPLUS, RATIONAL, Semiring, get_semiring
from .monoid import FreeMonoid, ProductMonoid, make_monoid
from .expr import Expr, parse, constant_term, literal_length
from .series import Polynomial, TruncatedSeries, denote, quotient
from .automaton import WeightedAutomaton, StateMap, behaviour_coeff, behaviour_series, is_conjugate
from .standard import StandardAutomaton, position_automaton
from .derived import derived_terms, n_vector, standard_derived_term_automaton, derived_term_automaton

__version__ = "0.1.0"
