import asyncio

import pytest

from bifrost import _shutdown_executor
from norns import FAIL, PASS, REFUSED, CaseResult, SuiteReport, SuiteRunner


@pytest.fixture
def selftest_config(config):
    yield dict(config, max_objects=1)
    _shutdown_executor()


def report_of(*results):
    return SuiteReport(7, 1, 64, list(results))


def test_case_line_layout():
    result = CaseResult("02-squares/pair2", PASS, "16 squares")
    assert result.line() == "pass    02-squares/pair2: 16 squares"
    assert CaseResult("x", REFUSED, "too big").line() == "refused x: too big"


def test_report_text_is_sorted_with_totals():
    report = report_of(
        CaseResult("b", PASS, "ok"),
        CaseResult("a", FAIL, "broken"),
        CaseResult("c", REFUSED, "cap"),
    )
    assert report.text().splitlines() == [
        "selftest seed=7 max_objects=1 max_arrows=64",
        "fail    a: broken",
        "pass    b: ok",
        "refused c: cap",
        "total 3: 1 pass, 1 fail, 1 refused",
    ]
    assert not report.ok


def test_digest_ignores_result_order():
    first = report_of(CaseResult("a", PASS, "x"), CaseResult("b", PASS, "y"))
    second = report_of(CaseResult("b", PASS, "y"), CaseResult("a", PASS, "x"))
    assert first.digest == second.digest
    assert first.ok and first.counts == {PASS: 2, FAIL: 0, REFUSED: 0}


def test_runner_runs_matching_cases(selftest_config):
    report = asyncio.run(SuiteRunner(selftest_config).run("02-squares/pair2"))
    assert report.text().splitlines() == [
        "selftest seed=7 max_objects=1 max_arrows=64",
        "pass    02-squares/pair2: 16 squares",
        "total 1: 1 pass, 0 fail, 0 refused",
    ]
    assert report.determinism is None


def test_runner_classifies_failures(selftest_config):
    class Broken:
        name = "broken"

        @staticmethod
        def run():
            raise AssertionError("expected 3, found 4")

    runner = SuiteRunner(selftest_config)
    assert runner.run_case(Broken()) == CaseResult("broken", FAIL, "expected 3, found 4")
    assert runner.error_count == 0


def test_runner_counts_unexpected_errors(selftest_config):
    class Crashing:
        name = "crashing"

        @staticmethod
        def run():
            raise KeyError(3)

    runner = SuiteRunner(selftest_config)
    result = runner.run_case(Crashing())
    assert result.outcome == FAIL
    assert result.detail.startswith("KeyError")
    assert runner.error_count == 1


def test_determinism_against_the_ledger(selftest_config, fresh_ledger):
    async def scenario():
        await fresh_ledger.connect()
        try:
            runner = SuiteRunner(selftest_config, fresh_ledger)
            first = await runner.check_determinism(report_of(CaseResult("a", PASS, "x")))
            again = await runner.check_determinism(report_of(CaseResult("a", PASS, "x")))
            changed = await runner.check_determinism(report_of(CaseResult("a", PASS, "y")))
            previous = await fresh_ledger.get_previous_run(7, 1, 64)
            cases = await fresh_ledger.get_run_cases(previous["run_id"])
            return first, again, changed, previous, cases
        finally:
            await fresh_ledger.close()

    first, again, changed, previous, cases = asyncio.run(scenario())
    assert first.determinism == "first run"
    assert again.determinism == PASS
    assert changed.determinism == FAIL and not changed.ok
    assert previous["digest"] == changed.digest
    assert cases == [{"case_name": "a", "outcome": PASS, "detail": "y"}]


def test_ledger_separates_parameters(fresh_ledger):
    async def scenario():
        await fresh_ledger.connect()
        try:
            await fresh_ledger.setup_db()
            run_id = await fresh_ledger.record_run(7, 1, 64, "abc", [{"case_name": "a", "outcome": PASS}])
            return (
                run_id,
                await fresh_ledger.get_previous_run(7, 1, 64),
                await fresh_ledger.get_previous_run(7, 2, 64),
                await fresh_ledger.get_previous_run(7, 1, 64, before=run_id),
            )
        finally:
            await fresh_ledger.close()

    run_id, same, other, earlier = asyncio.run(scenario())
    assert same["run_id"] == run_id and same["digest"] == "abc"
    assert other is None
    assert earlier is None


def test_unreachable_ledger_raises_connection_error(tmp_path, fresh_ledger):
    async def scenario():
        await fresh_ledger.connect(str(tmp_path / "missing" / "ledger.db"))

    with pytest.raises(ConnectionError, match="Failed to connect"):
        asyncio.run(scenario())
    assert fresh_ledger.connection is None
