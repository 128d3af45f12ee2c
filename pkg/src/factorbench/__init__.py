"""Factorization workbench for finite monoids, an integer fragment, and
finitely presented monoids: atoms, primes, powerful atoms, length sets,
minimal factorizations, power monoids, and rewriting."""

__version__ = "0.1.0"

from .core import (
    FiniteMonoid,
    atom_transversal,
    cyclic,
    direct_product,
    divisor_closed_submonoid,
    full_transformation,
    gl,
    instance,
    load_cayley,
    null_monoid,
    order_and_idempotents,
    property_battery,
    reduce_generating_set,
    save_cayley,
    semigroup_closure,
    submonoid,
    trivial,
    two_element_with_zero,
    units,
)
from .factorization import (
    Comparison,
    IntegerFragment,
    LengthSet,
    MinimalCatalog,
    classify_arithmetic,
    compare,
    enumerate_factorizations,
    factorial_battery,
    factorization_class,
    is_minimal,
    is_powerful,
    is_prime,
    kappa_and_dichotomy,
    length_set,
    minimal_catalog,
    pi_eval,
)
from .power import atomicity_criterion, build_reduced_power_monoid, kappa_report
from .presentations import (
    Presentation,
    adian_check,
    bounded_length_set,
    congruent_bounded,
    ladder_presentation,
    normal_form,
    parse_presentation,
    psi,
    sandwich_power,
    sandwich_xyx,
    verify_ladder_properties,
)
from .words import Word, higman_scan, is_subword
