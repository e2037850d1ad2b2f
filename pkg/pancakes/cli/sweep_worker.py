import asyncio
from asyncio import Task
from typing import Callable, Dict, Iterable

from pancakes.cli.sweep_executor import SweepExecutor
from pancakes.cli.sweep_task import SweepItem, CheckResult
from pancakes.utils.log_utils import log_with_context
from pancakes.utils.utils import get_exception_detail


class SweepWorker:
    DEFAULT_WORKERS = 4

    def __init__(self, worker_id, config=None):
        config = config if config is not None else {}
        self.worker_id = worker_id
        self.executor = SweepExecutor(self.worker_id)
        self.config = config
        self.task_dict: Dict[str, Task] = {}
        self._semaphore = asyncio.Semaphore(self._get_workers())
        self._log_with_context(f"Created new Sweep Worker with config: {self.config}")

    async def run(self, items: Iterable[SweepItem], action: Callable[[SweepItem], CheckResult]) -> list[CheckResult]:
        """Run every item concurrently (bounded by ``workers``); results come back sorted by item."""
        items = list(items)
        self._log_with_context(f"{len(items)} sweep item(s) scheduled")
        for item in items:
            if item.key in self.task_dict:
                # the same check scheduled twice only runs once
                continue
            self.task_dict[item.key] = asyncio.create_task(self._execute_item(item, action))
        results = await asyncio.gather(*self.task_dict.values())
        self.task_dict.clear()
        return sorted(results, key=lambda result: result.get_item().sort_key())

    async def _execute_item(self, item: SweepItem, action) -> CheckResult:
        async with self._semaphore:
            try:
                return await self.executor.execute_item(item, action)
            except Exception as e:
                self._log_with_context(f'error when executing item: {get_exception_detail(e)}',
                                       item_key=item.key, log_level='error', exc_info=True)
                return item.failed(get_exception_detail(e))

    def _log_with_context(self, msg, item_key=None, log_level='info', **kwargs):
        context = {"WORKER_ID": str(self.worker_id), "ITEM": item_key}
        log_with_context(msg, context=context, log_level=log_level, **kwargs)

    def _get_workers(self):
        return self.config.get("workers", self.DEFAULT_WORKERS)
