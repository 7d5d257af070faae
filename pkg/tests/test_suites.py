import pytest

from affine_springer import suites
from affine_springer.lattice import DiagonalLattice, LatticeBasis
from affine_springer.laurent import ONE, PI, ZERO


def test_run_check_stops_at_first_failure():
    chk = suites.run_check("x", "y", iter([(1, True), (2, False), (3, False)]))
    assert not chk.ok and chk.failure == "2" and chk.cases == 2
    assert chk.as_dict()["ok"] is False


def test_run_check_turns_exceptions_into_failures():
    def boom():
        yield 1, True
        raise ZeroDivisionError("bad")

    chk = suites.run_check("x", "y", boom())
    assert chk.failure.startswith("ZeroDivisionError")


@pytest.mark.parametrize("name", ["bijections", "oracles", "identities"])
def test_small_ranges_pass(name):
    checks = suites.run_suite(name, n_max=3, s_max=4)
    assert checks and all(c.ok for c in checks)


def test_supplied_lattice_checks():
    L = LatticeBasis.from_columns([[ONE, ZERO], [PI, PI]])
    checks = suites.check_lattice(L)
    assert len(checks) == 3 and all(c.ok for c in checks)
    extra = suites.run_suite("matrix", lattice=DiagonalLattice((0, 1, 2)))
    assert any(c.name.startswith("supplied lattice") for c in extra)
    assert all(c.ok for c in extra)


def test_every_check_has_an_anchor():
    for c in suites.run_suite("all", n_max=3, s_max=3):
        assert c.anchor and c.ok
