import sympy as sp

import coxforge

t = sp.Symbol("t")


def as_poly(coeffs):
    return sp.Poly(list(reversed(coeffs)), t)


def test_commands():
    assert "theoremc" in coxforge.commands()


def test_construct_report():
    code, rep = coxforge.run("construct", n=5, tau="(123)")
    assert code == 0
    assert rep["schema"] == 1
    assert rep["verification"]["passed"] is True


def test_usage_error_code():
    code, rep = coxforge.run("construct", n=3)
    assert code == 2
    assert "error" in rep


def test_salem_verdicts():
    phi = [1, -2, 1, -2, 1]
    v = coxforge.is_salem(phi)
    assert v["is_salem"] is True
    # independent enclosure check with sympy
    lo, hi = (sp.Rational(x) for x in v["largest_root"])
    root = max(r for r in sp.Poly(as_poly(phi)).real_roots())
    assert lo <= root.evalf(30) <= hi
    assert coxforge.is_salem([-2, 0, 1])["is_salem"] is False


def test_chi_and_alpha_minpoly():
    # strip_cyclotomic(chi_5) is the minimal polynomial of alpha; sympy factors independently
    chi5 = coxforge.chi(5)
    stripped = coxforge.strip_cyclotomic(chi5)
    assert stripped == [1, -2, 1, -2, 1]
    factors = [f for f, _ in sp.factor_list(as_poly(chi5).as_expr())[1]]
    assert any(sp.Poly(f, t) == as_poly(stripped) for f in factors)


def test_word_char_poly_against_sympy():
    letters = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9]
    mat = coxforge.word_matrix(letters, 10)
    m = sp.Matrix(mat)
    assert m.T * sp.diag(1, *([-1] * 10)) * m == sp.diag(1, *([-1] * 10))
    cp = m.charpoly(t).as_expr()
    assert sp.expand(cp - as_poly(coxforge.word_char_poly(letters, 10)).as_expr()) == 0


def test_theoremc_conclusion():
    code, rep = coxforge.run("theoremc")
    assert code == 0
    assert rep["certificate"]["conclusion"].startswith("not realizable")
