from fractions import Fraction
from pathlib import Path

import pytest

import axtower as ax

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def cfg(p, e=1):
    return ax.TowerConfig.pure(ax.ResidueField.prime(p), e)


def test_oscillation_of_pi1():
    pi1 = ax.TowerElement.uniformizer(cfg(3), 1)
    assert str(ax.galois_oscillation(pi1)) == "5/6"
    assert ax.galois_oscillation(pi1).value == Fraction(5, 6)
    assert ax.approximation_defect(pi1, 0).value == Fraction(1, 3)
    lhs, rhs = ax.oscillation_identity(pi1)
    assert lhs == rhs


def test_oracle_matches_formula():
    c = cfg(2)
    x = ax.TowerElement.uniformizer(c, 2) + ax.TowerElement.uniformizer(c, 1)
    assert ax.cyclotomic_oracle_oscillation(x) == ax.galois_oscillation(x)
    assert ax.ax_constants(3, 1) == (Fraction(1, 6), Fraction(3, 4))


def test_json_round_trip():
    x = ax.TowerElement.from_json((FIXTURES / "mixed_p2.json").read_text())
    assert ax.TowerElement.from_json(x.to_json()) == x
    assert x.level == 2


def test_twist_and_classes():
    k = ax.ResidueField.make(2, [1, 1, 1])
    one = ax.ResidueElement.from_int(k, 1)
    w = ax.ResidueElement(k, [0, 1])
    rel = ax.TwistRelation(k, [one, one])
    seq = ax.extend_sequence(rel, [w], 6)
    assert ax.check_relation(seq, rel)
    assert ax.solution_count(ax.TwistRelation(ax.ResidueField.prime(2), [ax.ResidueElement.from_int(ax.ResidueField.prime(2), 1)] * 2), 5) == 2

    c3 = cfg(3)
    cls = ax.validate_invariant(ax.TowerElement.eta(c3, 1, 2) + ax.TowerElement.eta(c3, 2, 2))
    assert cls.validated
    assert [d.coords for d in ax.psi_digits(cls, 3)] == [[1], [1], [0]]
    assert ax.torsion(ax.validate_invariant(ax.TowerElement.eta(cfg(2), 1, 1))) == (1, 1)


def test_combinatorics_and_errors():
    pairs, bound = ax.index_set(2, 3, 1)
    assert pairs == [(1, 5), (2, 5), (2, 6)]
    assert bound == 6
    assert ax.newton_polygon({0: "1", 1: "0", 2: "0"}) == [(Fraction(-1), 1), (Fraction(0), 1)]
    bad = ax.validate_invariant(ax.TowerElement.teichmuller(cfg(2), 2, ax.ResidueElement.from_int(ax.ResidueField.prime(2), 1), -3))
    with pytest.raises(ax.SupportViolation):
        ax.psi_digits(bad, 2)
    with pytest.raises(ax.AxtowerError):
        ax.cyclotomic_oracle_oscillation(ax.TowerElement.uniformizer(cfg(5), 1))


def test_cli_entry():
    code, out, err = ax.run_cli(["indices", "--p", "2", "--e", "3", "--r", "1"])
    assert code == 0
    assert out == "(1,5) (2,5) (2,6) |I_r|=3 bound=6 OK\n"
