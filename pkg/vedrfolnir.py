import aiosqlite
import asyncio
import sqlite3
from typing import Dict, List, Optional

import click


class dbClient:
    """Run ledger for selftest: one row per run, one row per case."""

    _instance = None

    def __new__(cls, config=None):
        if cls._instance is None:
            cls._instance = super(dbClient, cls).__new__(cls)
            cls._instance.connection = None
            cls._instance.db_path = (config or {}).get("ledger_path") or 'mimir.db'
            cls._instance._connection_lock = asyncio.Lock()
            cls._instance.config = config
        return cls._instance

    def _debug(self, message: str):
        if self.config and self.config.get("debug", False):
            click.echo(f"[DB] {message}", err=True)

    async def _ensure_connection(self):
        """Open the ledger on first use."""
        async with self._connection_lock:
            if self.connection is None:
                await self._connect()

    async def _connect(self):
        try:
            self.connection = await aiosqlite.connect(self.db_path, timeout=30)
            self.connection.row_factory = sqlite3.Row
            await self.connection.execute("SELECT 1")
        except (aiosqlite.Error, sqlite3.Error, OSError) as e:
            self.connection = None
            raise ConnectionError(f"Failed to connect to ledger {self.db_path}: {e}") from e
        self._debug(f"Connected to {self.db_path}")

    async def connect(self, db_path: Optional[str] = None):
        """Connect to the ledger, optionally switching files first."""
        if db_path is not None and db_path != self.db_path:
            await self.close()
            self.db_path = db_path
        await self._ensure_connection()

    async def close(self):
        """Close the database connection."""
        async with self._connection_lock:
            if self.connection:
                try:
                    await self.connection.close()
                except (aiosqlite.OperationalError, sqlite3.OperationalError):
                    pass
                self.connection = None

    async def _execute(self, operation):
        """Run one ledger operation on a live connection."""
        await self._ensure_connection()
        return await operation()

    async def setup_db(self):
        """Create the ledger tables if they don't exist."""
        async def _setup_operation():
            async with self.connection.cursor() as cursor:
                await cursor.execute("""
                CREATE TABLE IF NOT EXISTS runs (
                    run_id INTEGER PRIMARY KEY AUTOINCREMENT,
                    seed INTEGER NOT NULL,
                    max_objects INTEGER NOT NULL,
                    max_arrows INTEGER NOT NULL,
                    digest TEXT NOT NULL,
                    created TIMESTAMP DEFAULT CURRENT_TIMESTAMP
                );
                """)
                await cursor.execute("""
                CREATE TABLE IF NOT EXISTS cases (
                    run_id INTEGER NOT NULL,
                    case_name TEXT NOT NULL,
                    outcome TEXT NOT NULL,
                    detail TEXT,
                    PRIMARY KEY (run_id, case_name),
                    FOREIGN KEY (run_id) REFERENCES runs(run_id) ON DELETE CASCADE
                );
                """)
            await self.connection.commit()
            self._debug("Ledger tables ready")

        await self._execute(_setup_operation)

    async def record_run(self, seed: int, max_objects: int, max_arrows: int, digest: str, cases: List[Dict]) -> int:
        """
        Store one selftest run and its case results.

        Args:
            cases: dicts with case_name, outcome and detail.

        Returns:
            int: the new run_id.
        """
        async def _operation():
            async with self.connection.cursor() as cursor:
                await cursor.execute(
                    "INSERT INTO runs (seed, max_objects, max_arrows, digest) VALUES (?, ?, ?, ?)",
                    (seed, max_objects, max_arrows, digest),
                )
                run_id = cursor.lastrowid
                await cursor.executemany(
                    "INSERT INTO cases (run_id, case_name, outcome, detail) VALUES (?, ?, ?, ?)",
                    [(run_id, case["case_name"], case["outcome"], case.get("detail", "")) for case in cases],
                )
            await self.connection.commit()
            return run_id

        run_id = await self._execute(_operation)
        self._debug(f"Recorded run {run_id} with {len(cases)} cases")
        return run_id

    async def get_previous_run(self, seed: int, max_objects: int, max_arrows: int, before: Optional[int] = None) -> Optional[Dict]:
        """
        Latest run with the same parameters, optionally older than run_id `before`.

        Returns:
            dict | None: run_id, seed, max_objects, max_arrows, digest and created.
        """
        async def _operation():
            query = """
            SELECT run_id, seed, max_objects, max_arrows, digest, created
            FROM runs
            WHERE seed = ? AND max_objects = ? AND max_arrows = ? AND run_id < ?
            ORDER BY run_id DESC
            LIMIT 1
            """
            limit = before if before is not None else 2 ** 62
            async with self.connection.cursor() as cursor:
                await cursor.execute(query, (seed, max_objects, max_arrows, limit))
                row = await cursor.fetchone()
                return dict(row) if row else None

        return await self._execute(_operation)

    async def get_run_cases(self, run_id: int) -> List[Dict]:
        """Case rows of one run, sorted by case name."""
        async def _operation():
            async with self.connection.cursor() as cursor:
                await cursor.execute(
                    "SELECT case_name, outcome, detail FROM cases WHERE run_id = ? ORDER BY case_name",
                    (run_id,),
                )
                return [dict(row) for row in await cursor.fetchall()]

        return await self._execute(_operation)
