"""Involutivity verdicts.

The three worked distributions: constant commuting fields (integrable by
inspection), the odd contact-like field chi = theta1*d/dt + d/dtheta1
together with d/dt (integrable, [chi,chi] = 2 d/dt lies in the span),
and the lone field d/dtheta1 + theta1*d/dt2 in R^{2|1} whose self
bracket 2 d/dt2 escapes the span.  {d/dt1, t1*d/dt2} has no constant
pivot pair, which is exactly the indeterminate case.
"""

import itertools
import random

import pytest

from supergeom import (
    Context,
    ContextMismatch,
    Distribution,
    Involutivity,
    Parity,
    SuperDerivation,
    involutive,
)

R11 = Context(even=["t"], odd=["theta1"])
R21 = Context(even=["t1", "t2"], odd=["theta1"])
R20 = Context(even=["t1", "t2"], odd=[])


def d_dt(ctx, name):
    return SuperDerivation.coordinate(ctx, name)


def chi_r11():
    # theta1 d/dt + d/dtheta1
    return SuperDerivation(
        R11, Parity.ODD, [R11.var("theta1")], [R11.one()]
    )


def chi_r21():
    # d/dtheta1 + theta1 d/dt2
    return SuperDerivation(
        R21, Parity.ODD, [R21.zero(), R21.var("theta1")], [R21.one()]
    )


class TestVerdicts:
    def test_constant_fields_integrable(self):
        assert involutive([d_dt(R11, "t"), d_dt(R11, "theta1")]) is Involutivity.INTEGRABLE

    def test_contact_pair_integrable(self):
        assert involutive([d_dt(R11, "t"), chi_r11()]) is Involutivity.INTEGRABLE

    def test_lone_odd_field_not_integrable(self):
        assert involutive([chi_r21()]) is Involutivity.NOT_INTEGRABLE

    def test_no_pivot_is_indeterminate(self):
        t1 = R20.var("t1")
        scaled = SuperDerivation(R20, Parity.EVEN, [R20.zero(), t1], [])
        assert involutive([d_dt(R20, "t1"), scaled]) is Involutivity.INDETERMINATE

    def test_three_fields_integrable(self):
        chi = SuperDerivation(
            R21, Parity.ODD, [R21.var("theta1"), R21.zero()], [R21.one()]
        )
        fields = [d_dt(R21, "t1"), d_dt(R21, "t2"), chi]
        assert involutive(fields) is Involutivity.INTEGRABLE


class TestOrderIndependence:
    def test_pair_permutations(self):
        cases = [
            [d_dt(R11, "t"), chi_r11()],
            [d_dt(R20, "t1"),
             SuperDerivation(R20, Parity.EVEN, [R20.zero(), R20.var("t1")], [])],
        ]
        for fields in cases:
            verdicts = {
                involutive(list(p)) for p in itertools.permutations(fields)
            }
            assert len(verdicts) == 1

    def test_triple_permutations(self):
        chi = SuperDerivation(
            R21, Parity.ODD, [R21.var("theta1"), R21.zero()], [R21.one()]
        )
        fields = [d_dt(R21, "t1"), d_dt(R21, "t2"), chi]
        verdicts = {involutive(list(p)) for p in itertools.permutations(fields)}
        assert verdicts == {Involutivity.INTEGRABLE}

    def test_not_integrable_with_companion_field(self):
        fields = [chi_r21(), d_dt(R21, "t1")]
        for p in itertools.permutations(fields):
            assert involutive(list(p)) is Involutivity.NOT_INTEGRABLE


class TestValidation:
    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            Distribution([])

    def test_mixed_contexts_rejected(self):
        with pytest.raises(ContextMismatch):
            Distribution([d_dt(R11, "t"), d_dt(R21, "t1")])

    def test_distribution_object_accepted(self):
        d = Distribution([d_dt(R11, "t")])
        assert involutive(d) is Involutivity.INTEGRABLE


class TestRendering:
    def test_verdict_strings(self):
        assert str(Involutivity.INTEGRABLE) == "Integrable"
        assert str(Involutivity.NOT_INTEGRABLE) == "NotIntegrable"
        assert str(Involutivity.INDETERMINATE) == "Indeterminate"
