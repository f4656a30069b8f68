"""Selftest runner: schedules proposition-suite cases and assembles the canonical report."""

import asyncio
import hashlib
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import click

from bifrost import _get_executor
from mimir.errors import SizeGuardError
from mimir.suites import Case, SuiteContext, all_cases

PASS = "pass"
FAIL = "fail"
REFUSED = "refused"


@dataclass(frozen=True)
class CaseResult:
    name: str
    outcome: str
    detail: str

    def line(self) -> str:
        return f"{self.outcome:<7} {self.name}: {self.detail}"


@dataclass
class SuiteReport:
    seed: int
    max_objects: int
    max_arrows: int
    results: List[CaseResult]
    determinism: Optional[str] = field(default=None)

    @property
    def counts(self) -> Dict[str, int]:
        counts = {PASS: 0, FAIL: 0, REFUSED: 0}
        for result in self.results:
            counts[result.outcome] += 1
        return counts

    @property
    def ok(self) -> bool:
        return self.counts[FAIL] == 0 and self.determinism != FAIL

    def text(self) -> str:
        """Canonical report: header, one line per case sorted by name, totals."""
        counts = self.counts
        lines = [f"selftest seed={self.seed} max_objects={self.max_objects} max_arrows={self.max_arrows}"]
        lines += [result.line() for result in sorted(self.results, key=lambda r: r.name)]
        lines.append(f"total {len(self.results)}: {counts[PASS]} pass, {counts[FAIL]} fail, {counts[REFUSED]} refused")
        return "\n".join(lines) + "\n"

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.text().encode("utf-8")).hexdigest()

    def as_rows(self) -> List[Dict]:
        return [{"case_name": r.name, "outcome": r.outcome, "detail": r.detail} for r in self.results]


class SuiteRunner:
    def __init__(self, config: dict, db_instance=None):
        """
        Args:
            config: validated configuration (seed, max_objects, max_arrows,
                max_construction_arrows, debug).
            db_instance: optional run ledger; the determinism check is skipped without it.
        """
        self.config = config
        self.db_instance = db_instance
        self.error_count = 0
        self.context = SuiteContext(
            max_objects=config["max_objects"],
            seed=config["seed"],
            max_arrows=config["max_arrows"],
            max_construction_arrows=config["max_construction_arrows"],
        )

    def _debug(self, message: str):
        if self.config.get("debug", False):
            click.echo(f"[NORNS] {message}", err=True)

    def run_case(self, case: Case) -> CaseResult:
        """Run one case in the calling thread and classify its outcome."""
        try:
            return CaseResult(case.name, PASS, case.run())
        except AssertionError as e:
            return CaseResult(case.name, FAIL, str(e))
        except SizeGuardError as e:
            return CaseResult(case.name, REFUSED, str(e))
        except Exception as e:
            self.error_count += 1
            click.echo(f"[ERROR] {case.name} raised {type(e).__name__}: {e}", err=True)
            return CaseResult(case.name, FAIL, f"{type(e).__name__}: {e}")

    async def run(self, pattern: Optional[str] = None) -> SuiteReport:
        """
        Run every case (or those whose name contains pattern) on the shared
        thread pool and return the report.
        """
        cases = all_cases(self.context)
        if pattern:
            cases = [case for case in cases if pattern in case.name]
        self._debug(f"Running {len(cases)} cases with seed {self.context.seed}")

        loop = asyncio.get_running_loop()
        executor = _get_executor(self.config.get("workers"))
        futures = [loop.run_in_executor(executor, self.run_case, case) for case in cases]
        results = await asyncio.gather(*futures)

        report = SuiteReport(self.context.seed, self.context.max_objects, self.context.max_arrows, list(results))
        self._debug(f"Finished: {report.counts}")
        if self.db_instance is not None and not pattern:
            await self.check_determinism(report)
        return report

    async def check_determinism(self, report: SuiteReport) -> SuiteReport:
        """
        Record the run in the ledger and compare its digest with the latest
        earlier run that used the same parameters.
        """
        await self.db_instance.setup_db()
        run_id = await self.db_instance.record_run(
            report.seed, report.max_objects, report.max_arrows, report.digest, report.as_rows(),
        )
        previous = await self.db_instance.get_previous_run(report.seed, report.max_objects, report.max_arrows, before=run_id)
        if previous is None:
            report.determinism = "first run"
        elif previous["digest"] == report.digest:
            report.determinism = PASS
        else:
            report.determinism = FAIL
            click.echo(f"[ERROR] Report differs from run {previous['run_id']}", err=True)
        self._debug(f"Determinism check: {report.determinism}")
        return report
