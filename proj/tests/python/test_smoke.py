"""Smoke tests for the python bindings: the worked example end to end, the
error mapping, and a few oracle spot checks."""

import json

import pytest

import arithdeg as ad


def test_worked_example():
    field = ad.validate_field(-19)
    quat = ad.validate_quaternion(6, field)
    setting = ad.Setting(field, quat)
    rep = ad.degree_y(setting, 6)
    assert rep.supported
    assert rep.p == 19
    assert rep.diff.primes == [19]
    assert rep.ideal_count == 1
    assert rep.count == 8
    assert rep.length.num == 1 and rep.length.den == 1
    assert rep.degree_coeff == 8
    assert rep.degree_display() == "8·log(19)"


def test_zero_branch_and_json():
    field = ad.validate_field(-19)
    setting = ad.Setting(field, ad.validate_quaternion(6, field))
    rep = ad.degree_y(setting, 1)
    assert not rep.supported
    assert rep.degree_coeff == 0
    payload = json.loads(rep.to_json())
    assert payload["p"] is None
    assert payload["diff"] == [2, 3, 19]
    assert ad.parse_json(rep.to_json()).to_json() == rep.to_json()


def test_local_ingredients():
    field = ad.validate_field(-19)
    assert ad.kronecker_symbol(-19, 5) == 1
    assert ad.splitting_type(field, 2).kind == ad.SplitKind.inert
    assert ad.hilbert_symbol(-19, -1, ad.Place.finite(19)) == -1
    assert ad.hilbert_oracle(-19, -1, 19) == -1
    assert ad.count_ideals(field, 5) == 2 == ad.count_ideals_hnf(field, 5)
    assert ad.factorize(-114).exponents() == {2: 1, 3: 1, 19: 1}


def test_elliptic_reduction():
    field = ad.validate_field(-19)
    rep = ad.degree_z(field, 1)
    assert rep.degree_coeff == 2 and rep.p == 19
    assert ad.z_reduction_check(field, 1)


def test_error_mapping():
    with pytest.raises(ValueError):
        ad.validate_field(-12)
    with pytest.raises(ValueError):
        ad.factorize(0)
    with pytest.raises(OverflowError):
        ad.count_ideals_hnf(ad.validate_field(-19), 10**9)
    field = ad.validate_field(-7)
    with pytest.raises(ValueError):
        ad.validate_quaternion(6, field)  # 2 splits in Q(sqrt(-7))
