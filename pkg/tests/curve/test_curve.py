import pytest

from mecsbox.curve import (
    AffinePoint,
    CurveParams,
    contains,
    enumerate_points,
    hasse_bound_holds,
    point_count,
    solve_x_for_y,
    solve_x_for_y_loop,
    x_coordinates_pairing,
)
from mecsbox.exceptions import NotPrime, ParameterOutOfRange

# y^2 = x^3 + 1 over F_11, listed in increasing y
E_11_1 = [(10, 0), (0, 1), (9, 2), (2, 3), (5, 4), (7, 5), (7, 6), (5, 7), (2, 8), (9, 9), (0, 10)]


def test_curve_params():
    params = CurveParams.create(11, 1)

    assert params.p == 11
    assert params.a == 0
    assert str(params) == "E(11, 1)"


@pytest.mark.parametrize("b", [-1, 11, 100])
def test_curve_params_rejects_b_out_of_range(b: int):
    with pytest.raises(ParameterOutOfRange):
        CurveParams.create(11, b)


def test_curve_params_validates_prime():
    with pytest.raises(NotPrime):
        CurveParams.create(15, 1)


def test_enumerate_points():
    points = enumerate_points(CurveParams.create(11, 1))

    assert [tuple(point) for point in points] == E_11_1


def test_contains():
    params = CurveParams.create(11, 1)

    assert contains(params, 10, 0) is True
    assert contains(params, 0, 1) is True
    assert contains(params, 1, 1) is False
    assert contains(params, 11, 0) is False


def test_affine_point_rejects_points_off_the_curve():
    with pytest.raises(ParameterOutOfRange):
        AffinePoint(CurveParams.create(11, 1), 1, 1)


def test_solve_x_for_y_rejects_y_out_of_range():
    params = CurveParams.create(11, 1)
    with pytest.raises(ParameterOutOfRange):
        solve_x_for_y(params, 11)
    with pytest.raises(ParameterOutOfRange):
        solve_x_for_y_loop(params, -1)


@pytest.mark.parametrize("p,b", [(11, 0), (11, 1), (257, 0), (257, 200), (1667, 351)])
def test_solvers_agree(p: int, b: int):
    params = CurveParams.create(p, b)
    for y in range(0, p, max(1, p // 64)):
        assert solve_x_for_y(params, y) == solve_x_for_y_loop(params, y)


def test_each_y_has_exactly_one_point():
    params = CurveParams.create(29, 3)
    for y in range(29):
        assert sum(contains(params, x, y) for x in range(29)) == 1


@pytest.mark.parametrize("p,b", [(11, 1), (29, 3), (257, 0), (2027, 8)])
def test_point_count(p: int, b: int):
    params = CurveParams.create(p, b)

    assert point_count(params) == p + 1
    assert hasse_bound_holds(params) is True


def test_x_coordinates_pairing():
    pairing = x_coordinates_pairing(CurveParams.create(11, 1))

    assert pairing[10] == (0,)
    assert pairing[0] == (1, 10)
    assert sum(len(ys) for ys in pairing.values()) == 11
    assert all(len(ys) == 1 or ys[0] + ys[1] == 11 for ys in pairing.values())
