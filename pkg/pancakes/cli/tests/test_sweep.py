from unittest import TestCase

from pancakes.cli.sweep import run_all, sweep_items, aggregate_exit_code, run_sweep_item
from pancakes.cli.sweep_task import SweepItem, CheckKind
from pancakes.group_core.context import GroupContext, GroupType
from pancakes.presentations.catalog import build_presentation
from pancakes.presentations.presentation import PresentationFamily
from pancakes.utils.errors import Overflow

CAPS = {"bfsCap": 2000000, "maxCosets": 5000000, "workers": 2}
SMALL_RANGES = {GroupType.TYPE_A: range(4, 6), GroupType.TYPE_D: range(4, 5)}
SMALL_COSETS = {GroupType.TYPE_A: range(4, 5)}


def broken_r2_builder(ctx, family):
    p = build_presentation(ctx, family)
    if ctx == GroupContext.of("A", 4) and family == PresentationFamily.PANCAKE:
        return p.with_lowered_exponent(p.labels.index("R2"))
    return p


class SweepItemsTest(TestCase):

    def test_default_items(self):
        items = sweep_items()
        # 7 checks per (type, degree) plus the coset enumerations
        self.assertEqual(7 * 11 + 8, len(items))
        self.assertEqual(len(items), len({item.key for item in items}))

    def test_small_ranges(self):
        keys = [item.key for item in sweep_items(SMALL_RANGES, SMALL_COSETS)]
        self.assertIn("A4/cosets/pancake", keys)
        self.assertNotIn("A5/cosets/pancake", keys)
        self.assertIn("D4/relators/coxeter", keys)
        self.assertIn("D4/lemmas", keys)
        self.assertIn("A5/order/coxeter", keys)
        self.assertIn("A5/closures", keys)
        self.assertIn("D4/translation", keys)


class SweepTest(TestCase):

    def test_small_sweep_passes(self):
        exit_code, results = run_all(CAPS, ranges=SMALL_RANGES, coset_ranges=SMALL_COSETS)
        self.assertEqual(0, exit_code)
        self.assertEqual(22, len(results))
        self.assertTrue(all(result.is_passed() for result in results))

    def test_injected_fault_is_reported(self):
        exit_code, results = run_all(CAPS, presentation_builder=broken_r2_builder,
                                     ranges=SMALL_RANGES, coset_ranges={})
        self.assertEqual(1, exit_code)
        failed = [result for result in results if result.is_failed()]
        self.assertEqual(["A4/relators/pancake", "A4/translation"], [result.get_item().key for result in failed])
        self.assertIn("R2()", failed[0].error_message)
        self.assertIn("R2()", failed[1].error_message)
        self.assertEqual("R2", failed[0].report.relators_failed[0].label)

    def test_cap_gives_overflow(self):
        exit_code, results = run_all({**CAPS, "bfsCap": 10}, ranges={GroupType.TYPE_A: range(4, 5)},
                                     coset_ranges={})
        self.assertEqual(2, exit_code)
        self.assertEqual(["overflow", "pass", "overflow", "overflow", "pass", "pass", "pass"], [result.verdict() for result in results])

    def test_failure_outranks_overflow(self):
        exit_code, _ = run_all({**CAPS, "bfsCap": 10}, presentation_builder=broken_r2_builder,
                               ranges={GroupType.TYPE_A: range(4, 5)}, coset_ranges={})
        self.assertEqual(1, exit_code)

    def test_coset_overflow(self):
        item = SweepItem(GroupContext.of("B", 4), CheckKind.COSETS, PresentationFamily.PANCAKE)
        with self.assertRaises(Overflow):
            run_sweep_item(item, {**CAPS, "maxCosets": 20})

    def test_aggregate_of_nothing_passes(self):
        self.assertEqual(0, aggregate_exit_code([]))

    def test_closures_and_translation_items(self):
        for check in (CheckKind.CLOSURES, CheckKind.TRANSLATION):
            item = SweepItem(GroupContext.of("B", 5), check)
            with self.subTest(check=check.value):
                self.assertTrue(run_sweep_item(item, CAPS).is_passed())
        with self.assertRaises(Overflow):
            run_sweep_item(SweepItem(GroupContext.of("B", 5), CheckKind.CLOSURES), {**CAPS, "bfsCap": 100})
