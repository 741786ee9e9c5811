"""Exact arithmetic degrees of special-endomorphism loci on quaternionic CM
moduli, with every local ingredient (Hilbert symbols, quaternion invariants,
Diff sets, ideal counts, orbital integrals, deformation lengths) exposed and
backed by independent brute-force oracles."""

from ._arithdeg import (
    BoundError,
    ConsistencyError,
    DegreeReport,
    DiffSet,
    DiffVariant,
    FactoredRational,
    FieldData,
    Place,
    QuaternionData,
    Rational,
    Setting,
    SplitKind,
    SplittingData,
    StackKind,
    SuiteResult,
    ValidationError,
    VerifyLevel,
    argument_m,
    beta_valuation,
    count_ideals,
    count_ideals_divisor_sum,
    count_ideals_hnf,
    count_ideals_local,
    csv_header,
    degree_y,
    degree_z,
    diff_b_set,
    diff_set,
    epsilon_p,
    factorize,
    hilbert_oracle,
    hilbert_symbol,
    is_prime,
    kronecker_symbol,
    length_y,
    length_z,
    local_invariant,
    orbital_integral,
    parse_json,
    point_count,
    run_verification,
    splitting_type,
    validate_field,
    validate_quaternion,
    z_reduction_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
