"""Exact cyclotomic polynomials and the structure of Phi_k(x**n)."""

from ._backend import BACKEND
from .cyclotomic import identify_cyclotomic, phi, phi_mobius, phi_recursive
from .numtheory import (FactoredInt, divisors, factorize, inverse_totient, is_probable_prime,
                        mobius, ord_p, radical, tau, totient)
from .polyring import IntPolynomial, NotDivisible, PolySyntaxError, format_poly, parse_poly
from .primesearch import PrimeSearchReport, eval_composition, search_a, search_n
from .structure import (CompositionSpec, CycloProduct, divides_lemma_check, expand_product,
                        factor_composition, factor_prime_quotient, golomb_condition,
                        is_irreducible_composition, millennial_solutions)

__version__ = "0.1.0"
