import pytest

import chernlab as cl


def test_parse_and_groebner():
    r = cl.Ring("Q[x,y]")
    gb = cl.groebner(r.ideal("x^2+y^2-1, x-y"))
    assert [str(g) for g in gb.basis] == ["x - y", "y^2 - 1/2"]


def test_parse_errors():
    with pytest.raises(cl.ParseError):
        cl.Ring("Q[x,x]")
    r = cl.Ring("Q[x,y]")
    with pytest.raises(cl.ParseError):
        r.poly("x/y")


def test_ideal_operations():
    r = cl.Ring("Q[x,y,z]")
    assert cl.colon(r.ideal("x^2, x*y"), r.ideal("x")) == r.ideal("x, y")
    sat, exponent = cl.saturate(r.ideal("x^3, x^2*y, x^2*z, z^2"), r.maximal_ideal())
    assert sat == r.ideal("x^2, z^2")
    assert exponent == 1
    assert cl.krull_dim(r.ideal("x^3, x^2*y, x^2*z, z^2")) == 1
    assert cl.vdim(r.ideal("x^2, x*y, y^3, z")) == 4


def test_decompositions():
    r = cl.Ring("Q[x,y]")
    comps = cl.irreducible_decomposition(r.ideal("x^2, x*y, y^3"))
    assert len(comps) == 2
    assert r.ideal("x^2, y") in comps and r.ideal("x, y^3") in comps
    primes = cl.associated_primes(r.ideal("x^2, x*y"))
    assert sorted(primes) == [(["x"], 1), (["x", "y"], 0)]


def test_invariants_polynomial_ring():
    r = cl.Ring("Q[x,y]")
    m = cl.QuotientModule.free(r)
    assert cl.hs_series(m, r.maximal_ideal(), 4) == [1, 3, 6, 10, 15]
    assert cl.hilbert_coeffs(m, r.maximal_ideal())["coefficients"] == [1, 0, 0]
    assert cl.irreducible_coeffs(m, r.maximal_ideal())["coefficients"][0] == 1
    assert cl.socle_dim(m, r.ideal("x^2, x*y, y^3")) == 2


def test_fit_binomial():
    fit = cl.fit_binomial([2] * 6, 0)
    assert fit["coefficients"] == [2]
    assert fit["n_star"] == 0
    with pytest.raises(cl.NotStabilized):
        cl.fit_binomial([1, 2], 2)


def test_example_two():
    r = cl.Ring("F32003[x,y,z]")
    m = cl.QuotientModule(r.ideal("x^3, x^2*y, x^2*z, z^2"))
    assert m.dim == 1
    assert cl.h0m(m)["length"] == 1
    for (f,) in cl.sample_sop(m, 5, seed=3):
        assert cl.socle_dim(m, cl.Ideal(r, [f])) == 2
    assert not cl.cm_test(m)["cohen_macaulay"]


def test_sop_predicates():
    r = cl.Ring("Q[x,y]")
    m = cl.QuotientModule.free(r)
    xs = [r.poly("x"), r.poly("y")]
    assert cl.verify_sop(m, xs)["valid"]
    assert not cl.verify_sop(m, [r.poly("x"), r.poly("x")])["valid"]
    assert cl.is_d_sequence(m, xs) == (True, None)
    assert cl.g_predicate(m, xs)["verdict"] == "true"


def test_non_homogeneous_rejected():
    r = cl.Ring("Q[x,y]")
    with pytest.raises(cl.Unsupported):
        cl.QuotientModule(r.ideal("x - 1"))
