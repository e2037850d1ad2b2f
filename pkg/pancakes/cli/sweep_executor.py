import asyncio
from typing import Callable

from pancakes.cli.sweep_task import SweepItem, CheckResult
from pancakes.utils.errors import Overflow
from pancakes.utils.log_utils import log_with_context, group_context
from pancakes.utils.utils import get_exception_detail


class SweepExecutor:

    def __init__(self, worker_id):
        self.worker_id = worker_id

    async def execute_item(self, item: SweepItem, action: Callable[[SweepItem], CheckResult]) -> CheckResult:
        """Run the blocking ``action`` in a thread; exceptions become failed or overflowed results."""
        self._log_with_context(f"Executing check {item.check.value}", item=item)
        try:
            result = await asyncio.to_thread(action, item)
            item.set_result(result)
        except Overflow as e:
            self._log_with_context(f"Check overflowed: {e}", item=item, log_level='warning')
            return item.overflowed(str(e))
        except Exception as e:
            self._log_with_context(f"Error executing check: {get_exception_detail(e)}", item=item,
                                   log_level='error', exc_info=True)
            return item.failed(get_exception_detail(e))

        self._handle_result(result)
        return result

    def _handle_result(self, result: CheckResult):
        item = result.get_item()
        if result.is_passed():
            self._log_with_context(f"Check passed {result.detail}".rstrip(), item=item)
        elif result.is_failed():
            self._log_with_context(f"Check failed: {result.error_message}", item=item, log_level='warning')
        elif result.is_overflowed():
            self._log_with_context(f"Check inconclusive: {result.error_message}", item=item, log_level='warning')
        else:
            err_msg = f"result for {item.key} must be either passed/failed/overflowed"
            self._log_with_context(err_msg, item=item, log_level='warning')
            raise Exception(err_msg)

    def _log_with_context(self, msg, item=None, log_level='info', **kwargs):
        if item is None:
            context = {"WORKER_ID": self.worker_id}
        else:
            context = group_context(item.context, item.family, worker_id=self.worker_id)
        log_with_context(msg, context=context, log_level=log_level, **kwargs)
