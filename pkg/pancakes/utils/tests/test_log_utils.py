from unittest import TestCase

from pancakes.group_core.context import GroupContext
from pancakes.presentations.presentation import PresentationFamily
from pancakes.utils.log_utils import log_with_context, group_context, group_label


class LogUtilsTest(TestCase):

    def test_context_prefix_skips_none_values(self):
        with self.assertLogs("pancakes", level='INFO') as logs:
            log_with_context("closure done", context={"GROUP": "A4", "FAMILY": None})
        self.assertEqual(["INFO:pancakes:[GROUP:A4] closure done"], logs.output)

    def test_without_context_logs_plain_message(self):
        with self.assertLogs("pancakes", level='WARNING') as logs:
            log_with_context("overflow", log_level='warning')
        self.assertEqual(["WARNING:pancakes:overflow"], logs.output)

    def test_debug_level(self):
        with self.assertLogs("pancakes", level='DEBUG') as logs:
            log_with_context("scan", log_level='debug')
        self.assertEqual(["DEBUG:pancakes:scan"], logs.output)

    def test_unknown_level_falls_back_to_info(self):
        with self.assertLogs("pancakes", level='INFO') as logs:
            log_with_context("x", log_level='verbose')
        self.assertEqual(["INFO:pancakes:x"], logs.output)

    def test_group_context(self):
        ctx = GroupContext.of("B", 5)
        self.assertEqual({"GROUP": "B5", "FAMILY": "coxeter", "CHECK": "order"},
                         group_context(ctx, PresentationFamily.COXETER, check="order"))
        self.assertEqual({"GROUP": "B5", "FAMILY": None}, group_context(ctx))

    def test_group_label(self):
        self.assertEqual("D5", group_label(GroupContext.of("D", 5)))
        self.assertIsNone(group_label(None))
