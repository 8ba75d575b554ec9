from concurrent.futures import ThreadPoolExecutor

import pytest
from pytest_mock import MockerFixture

from mecsbox.exceptions import ParameterOutOfRange
from mecsbox.runner import gather_in_executor, run_jobs


def _square(x: int) -> int:
    return x * x


def _fail_on_two_and_three(x: int) -> int:
    if x == 2:
        raise ParameterOutOfRange("two")
    if x == 3:
        raise ValueError("three")
    return x


@pytest.mark.asyncio
async def test_gather_inline():
    assert await gather_in_executor(_square, [(1,), (2,), (3,)]) == [1, 4, 9]


@pytest.mark.asyncio
async def test_gather_in_executor_keeps_submission_order():
    with ThreadPoolExecutor(max_workers=4) as executor:
        results = await gather_in_executor(_square, [(x,) for x in range(20)], workers=4, executor=executor)

    assert results == [x * x for x in range(20)]


@pytest.mark.asyncio
async def test_gather_in_executor_raises_first_failure_after_all_jobs(mocker: MockerFixture):
    func = mocker.Mock(side_effect=_fail_on_two_and_three)

    with ThreadPoolExecutor(max_workers=2) as executor:
        with pytest.raises(ParameterOutOfRange) as exc_info:
            await gather_in_executor(func, [(x,) for x in range(6)], workers=2, executor=executor)

    assert str(exc_info.value) == "two"
    assert func.call_count == 6


@pytest.mark.asyncio
async def test_gather_owns_and_shuts_down_its_pool(mocker: MockerFixture):
    pool = ThreadPoolExecutor(max_workers=2)
    pool_class = mocker.patch("mecsbox.runner.ProcessPoolExecutor", return_value=pool)
    shutdown = mocker.spy(pool, "shutdown")

    assert await gather_in_executor(_square, [(2,), (3,)], workers=2) == [4, 9]
    pool_class.assert_called_once_with(max_workers=2)
    shutdown.assert_called_once()


def test_run_jobs():
    assert run_jobs(_square, [(4,), (5,)]) == [16, 25]


def test_run_jobs_inline_failure():
    with pytest.raises(ValueError):
        run_jobs(_fail_on_two_and_three, [(3,)])
