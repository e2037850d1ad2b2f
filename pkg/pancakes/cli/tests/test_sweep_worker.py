import threading
import time
from unittest import IsolatedAsyncioTestCase

from pancakes.cli.sweep_executor import SweepExecutor
from pancakes.cli.sweep_task import SweepItem, CheckKind, CheckResult
from pancakes.cli.sweep_worker import SweepWorker
from pancakes.group_core.context import GroupContext
from pancakes.presentations.presentation import PresentationFamily
from pancakes.utils.errors import Overflow


def items_for(*degrees):
    return [SweepItem(GroupContext.of("A", n), CheckKind.RELATORS, PresentationFamily.PANCAKE) for n in degrees]


class SweepExecutorTest(IsolatedAsyncioTestCase):

    async def test_passed_result(self):
        executor = SweepExecutor("test")
        item = items_for(4)[0]
        result = await executor.execute_item(item, lambda i: i.passed(detail="ok"))
        self.assertTrue(result.is_passed())
        self.assertIs(result, item.get_result())

    async def test_exception_becomes_failure(self):
        def broken(item):
            raise RuntimeError("boom")

        with self.assertLogs(level='ERROR'):
            result = await SweepExecutor("test").execute_item(items_for(4)[0], broken)
        self.assertTrue(result.is_failed())
        self.assertIn("boom", result.error_message)

    async def test_overflow_becomes_overflowed(self):
        def too_big(item):
            raise Overflow(10)

        result = await SweepExecutor("test").execute_item(items_for(4)[0], too_big)
        self.assertTrue(result.is_overflowed())
        self.assertFalse(result.is_failed())

    async def test_empty_result_is_rejected(self):
        item = items_for(4)[0]
        with self.assertRaises(Exception):
            await SweepExecutor("test").execute_item(item, lambda i: CheckResult.empty_result(i))


class SweepWorkerTest(IsolatedAsyncioTestCase):

    async def test_results_sorted_by_item(self):
        worker = SweepWorker("test", {"workers": 2})
        results = await worker.run(items_for(6, 4, 5), lambda i: i.passed())
        self.assertEqual([4, 5, 6], [r.get_item().context.degree for r in results])
        self.assertEqual({}, worker.task_dict)

    async def test_concurrency_is_bounded(self):
        running, peak = 0, 0
        lock = threading.Lock()

        def slow(item):
            nonlocal running, peak
            with lock:
                running += 1
                peak = max(peak, running)
            time.sleep(0.05)
            with lock:
                running -= 1
            return item.passed()

        worker = SweepWorker("test", {"workers": 2})
        results = await worker.run(items_for(4, 5, 6, 7, 8), slow)
        self.assertEqual(5, len(results))
        self.assertLessEqual(peak, 2)

    async def test_duplicate_items_run_once(self):
        calls = []
        worker = SweepWorker("test")
        await worker.run(items_for(4, 4), lambda i: calls.append(i.key) or i.passed())
        self.assertEqual(["A4/relators/pancake"], calls)

    async def test_worker_survives_unexpected_errors(self):
        worker = SweepWorker("test")

        def mixed(item):
            if item.context.degree == 5:
                raise ValueError("bad item")
            return item.passed()

        with self.assertLogs(level='ERROR'):
            results = await worker.run(items_for(4, 5), mixed)
        self.assertEqual(["pass", "fail"], [r.verdict() for r in results])
