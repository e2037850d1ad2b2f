from unittest import TestCase

from pancakes.group_core.context import GroupContext
from pancakes.group_core.operations import eval_symbol, eval_word
from pancakes.group_core.symbols import r, s, rb2, s0p
from pancakes.group_core.words import word
from pancakes.presentations.coxeter_relators import coxeter_generators
from pancakes.presentations.generator_change import coxeter_in_pancake, pancake_in_coxeter, translate
from pancakes.presentations.pancake_relators import pancake_generators


class GeneratorChangeTest(TestCase):

    def test_known_expressions(self):
        a5, b4, d4 = GroupContext.of("A", 5), GroupContext.of("B", 4), GroupContext.of("D", 4)
        self.assertEqual("r4 r2 r4", coxeter_in_pancake(s(3), a5).render())
        self.assertEqual("r2", coxeter_in_pancake(s(1), a5).render())
        self.assertEqual("r1", coxeter_in_pancake(s(0), b4).render())
        self.assertEqual("r3 r1 r2 r1 r3", coxeter_in_pancake(s(2), b4).render())
        self.assertEqual("rb2", coxeter_in_pancake(s0p(), d4).render())
        self.assertEqual("s1 s2 s1", pancake_in_coxeter(r(3), a5).render())
        self.assertEqual("s0 s1 s0", pancake_in_coxeter(r(2), b4).render())
        self.assertEqual("s0p", pancake_in_coxeter(rb2(), d4).render())

    def test_expressions_evaluate_correctly(self):
        for group_type, n in (("A", 6), ("B", 6), ("D", 6)):
            ctx = GroupContext.of(group_type, n)
            for g in coxeter_generators(ctx):
                with self.subTest(ctx=str(ctx), generator=g.token):
                    self.assertEqual(eval_symbol(g, ctx), eval_word(coxeter_in_pancake(g, ctx)))
            for g in pancake_generators(ctx):
                with self.subTest(ctx=str(ctx), generator=g.token):
                    self.assertEqual(eval_symbol(g, ctx), eval_word(pancake_in_coxeter(g, ctx)))

    def test_translate_mixed_word(self):
        ctx = GroupContext.of("A", 4)
        mixed = word(ctx, r(4), s(2), r(2))
        to_pancake = translate(mixed, "pancake")
        to_coxeter = translate(mixed, "coxeter")
        self.assertTrue(all(symbol.is_pancake for symbol in to_pancake.symbols))
        self.assertFalse(any(symbol.is_pancake for symbol in to_coxeter.symbols))
        self.assertEqual(eval_word(mixed), eval_word(to_pancake))
        self.assertEqual(eval_word(mixed), eval_word(to_coxeter))

    def test_rejects_wrong_family(self):
        with self.assertRaises(ValueError):
            coxeter_in_pancake(r(2), GroupContext.of("A", 4))
        with self.assertRaises(ValueError):
            pancake_in_coxeter(s(2), GroupContext.of("A", 4))
