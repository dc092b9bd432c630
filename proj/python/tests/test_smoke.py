import pytest

import folia


def test_builtins_listed():
    assert "euler" in folia.builtin_names()
    assert "spiral" in folia.builtin_regular_names()


def test_euler_theta_and_report():
    p = folia.Presentation.builtin("euler", 3)
    assert p.variables == ["x1", "x2", "x3"]
    assert p.theta() == {"one": "3"}
    report = p.modular()
    assert report["unimodular"] == "no"
    assert report["witness_check"]["pass"]


def test_gl_is_unimodular():
    report = folia.Presentation.builtin("gln", 3).modular()
    assert report["unimodular"] == "yes"
    assert report["exactness"]["witness"] == "0"


def test_poisson_verify_and_theta():
    p = folia.Presentation.builtin("poisson3")
    assert p.verify()["pass"]
    assert p.theta() == {"dx": "0", "dy": "0", "dz": "-2"}


def test_text_round_trip():
    p = folia.Presentation.builtin("quadratic")
    q = folia.Presentation.parse(p.text())
    assert q.text() == p.text()
    assert q.modular() == p.modular()


def test_spiral_bott():
    r = folia.RegularPresentation.builtin("spiral")
    assert r.bott()["pass"]
    assert not r.bott(witness="1/2*ln(x^2 + y^2)")["pass"]


def test_errors():
    with pytest.raises(ValueError, match="line"):
        folia.Presentation.parse("[variables]\nx\n[ranks]\n1\n[anchor]\ne: x*+1\n")
    missing = "[variables]\nx, y\n[ranks]\n1, 1\n[labels]\n0: a\n1: u\n[anchor]\na: x, y\n[declared]\nl2: 0 0\n"
    with pytest.raises(folia.MissingBracket):
        folia.Presentation.parse(missing).modular()
