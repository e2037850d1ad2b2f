from unittest import TestCase

from pancakes.group_core.context import GroupContext
from pancakes.group_core.symbols import r, rb2, InvalidSymbolForContext
from pancakes.presentations.catalog import build_presentation
from pancakes.presentations.word_parser import parse_word
from pancakes.rewriting.ordering import SymbolOrder, shortlex_key


class SymbolOrderTest(TestCase):

    def test_canonical_order(self):
        order = SymbolOrder.canonical(build_presentation(GroupContext.of("D", 4), "pancake"))
        self.assertEqual(["rb2", "r2", "r3", "r4"], order.tokens())
        self.assertEqual("a", order.letter(rb2()))
        self.assertEqual("abcd", order.letters())

    def test_encode_decode(self):
        ctx = GroupContext.of("B", 4)
        order = SymbolOrder.canonical(build_presentation(ctx, "pancake"))
        w = parse_word("r1 r4 r2", ctx)
        self.assertEqual("adb", order.encode(w))
        self.assertEqual(w, order.decode("adb"))

    def test_shortlex(self):
        self.assertLess(shortlex_key("b"), shortlex_key("aa"))
        self.assertLess(shortlex_key("ab"), shortlex_key("ba"))

    def test_rejects_bad_orders(self):
        ctx = GroupContext.of("A", 4)
        with self.assertRaises(ValueError):
            SymbolOrder.from_tokens(ctx, ["r2", "r2"])
        with self.assertRaises(InvalidSymbolForContext):
            SymbolOrder(context=ctx, symbols=(r(2), rb2()))
        with self.assertRaises(ValueError):
            SymbolOrder.from_tokens(ctx, ["r2"]).letter(r(3))
