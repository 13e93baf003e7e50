from fractions import Fraction

import pytest

import shorlat


def test_closest_integer_rounds_halves_down():
    assert shorlat.closest_integer(Fraction(3, 2)) == 1
    assert shorlat.closest_integer(Fraction(-3, 2)) == -2
    assert shorlat.closest_integer(7) == 7


def test_big_integers_round_trip():
    n = 2**127 - 1
    assert shorlat.modpow(3, n - 1, n) == 1


def test_worked_recovery():
    out = shorlat.recover_period(614, 1433, 16)
    assert out["status"] == "Recovered"
    assert (out["k"], out["l"], out["r_hat"]) == (3, 7, 10)
    assert out["shortest_vector"] == [-14336, 6144, 1024]
    assert shorlat.make_params(16) == {"B": 16, "s": 1024, "N": 2048}


def test_reduction_matches_oracle():
    red = shorlat.gauss_reduce([89, 0], [55, 1])
    sv = shorlat.shortest_vector([89, 0], [55, 1])
    assert sum(c * c for c in red["u"]) == sv["norm2"] == 89
    relaxed = shorlat.gauss_reduce([89, 0], [55, 1], t_squared=Fraction(3, 2))
    assert relaxed["t_squared"] == Fraction(3, 2)
    assert relaxed["iterations"] <= red["iterations"] <= relaxed["iterations"] + 1


def test_continued_fractions():
    assert shorlat.convergents(614, 2048)[3] == (3, 10)
    res = shorlat.cf_recover(614, 16, lambda c: c == 10)
    assert res["r"] == 10


def test_sampling_and_factoring():
    N = shorlat.make_params(16)["N"]
    assert shorlat.ideal_sample(10, N, 3) == 614
    assert shorlat.ideal_sample(10, N, 3, "ceil") == 615
    t = shorlat.shor_classical(15, a=2, policy="exact_order")
    assert t["factor"] in (3, 5)
    assert t["r_true"] == 4


def test_errors_carry_codes():
    with pytest.raises(shorlat.ShorlatError) as info:
        shorlat.build_lattice(5000, 0, 16)
    assert info.value.args[0] == "OutOfRange"
    with pytest.raises(shorlat.ShorlatError):
        shorlat.make_params(16, N=100)
