import random
from unittest import TestCase

from pancakes.group_core.context import GroupContext, GroupType
from pancakes.group_core.operations import (identity, eval_symbol, apply_flip, eval_word, compose, inverse,
                                            negative_count)
from pancakes.group_core.permutation import SignedPermutation, DegreeMismatch
from pancakes.group_core.symbols import r, s, rb2, s0, s0p, InvalidSymbolForContext
from pancakes.group_core.words import Word, word


def generators_of(ctx):
    n = ctx.degree
    symbols = [s(i) for i in range(1, n)]
    if ctx.group_type == GroupType.TYPE_A:
        symbols += [r(k) for k in range(2, n + 1)]
    elif ctx.group_type == GroupType.TYPE_B:
        symbols += [r(k) for k in range(1, n + 1)] + [s0()]
    else:
        symbols += [r(k) for k in range(2, n + 1)] + [rb2(), s0p()]
    return symbols


class EvaluationTest(TestCase):

    def test_identity(self):
        self.assertEqual((1, 2, 3, 4), identity(GroupContext.of("A", 4)))
        self.assertEqual((1, 2, 3), identity(GroupContext.of("B", 3)))
        self.assertEqual((1, 2, 3, 4, 5), identity(GroupContext.of("D", 5)))

    def test_eval_symbol_definitions(self):
        a4, b3, d4 = GroupContext.of("A", 4), GroupContext.of("B", 3), GroupContext.of("D", 4)
        self.assertEqual((3, 2, 1, 4), eval_symbol(r(3), a4))
        self.assertEqual((-2, -1, 3), eval_symbol(r(2), b3))
        self.assertEqual((-1, 2, 3), eval_symbol(r(1), b3))
        self.assertEqual((-2, -1, 3, 4), eval_symbol(rb2(), d4))
        self.assertEqual((-2, -1, 3, 4), eval_symbol(s0p(), d4))
        self.assertEqual((4, 3, 2, 1), eval_symbol(r(4), d4))
        self.assertEqual((1, 3, 2, 4), eval_symbol(s(2), a4))
        self.assertEqual((-1, 2, 3), eval_symbol(s0(), b3))

    def test_eval_symbol_rejects_foreign_symbol(self):
        with self.assertRaises(InvalidSymbolForContext):
            eval_symbol(rb2(), GroupContext.of("A", 4))

    def test_apply_flip(self):
        a4, b3 = GroupContext.of("A", 4), GroupContext.of("B", 3)
        self.assertEqual((3, 2, 1, 4), apply_flip(r(3), identity(a4), a4))
        self.assertEqual((2, 3, 1, 4), apply_flip(r(2), SignedPermutation([3, 2, 1, 4]), a4))
        self.assertEqual((-2, -1, 3), apply_flip(r(1), SignedPermutation([2, -1, 3]), b3))

    def test_apply_flip_degree_mismatch(self):
        with self.assertRaises(DegreeMismatch):
            apply_flip(r(2), SignedPermutation([1, 2, 3]), GroupContext.of("A", 4))

    def test_eval_word(self):
        a4 = GroupContext.of("A", 4)
        self.assertEqual((1, 3, 2, 4), eval_word(word(a4, r(3), r(2), r(3))))
        self.assertEqual(identity(a4), eval_word(Word.identity(a4)))
        self.assertEqual(eval_word(word(a4, s(1), s(2))), eval_word(word(a4, r(3), r(2))))
        self.assertEqual((2, 3, 1, 4), eval_word(word(a4, r(3), r(2))))

    def test_compose_matches_concatenation(self):
        a4 = GroupContext.of("A", 4)
        self.assertEqual((2, 3, 1, 4), compose(eval_symbol(r(3), a4), eval_symbol(r(2), a4)))

    def test_homomorphism_on_random_words(self):
        rng = random.Random(7)
        for group_type in ("A", "B", "D"):
            for n in range(2, 9):
                ctx = GroupContext.of(group_type, n)
                symbols = generators_of(ctx)
                for _ in range(10):
                    u = Word.of(ctx, rng.choices(symbols, k=rng.randint(0, 12)))
                    v = Word.of(ctx, rng.choices(symbols, k=rng.randint(0, 12)))
                    with self.subTest(ctx=str(ctx), u=u.render(), v=v.render()):
                        self.assertEqual(compose(eval_word(u), eval_word(v)), eval_word(u * v))
                        self.assertEqual(inverse(eval_word(u)), eval_word(u.reversed()))

    def test_every_generator_is_an_involution(self):
        for group_type in ("A", "B", "D"):
            for n in range(2, 8):
                ctx = GroupContext.of(group_type, n)
                for g in generators_of(ctx):
                    with self.subTest(ctx=str(ctx), g=g.token):
                        p = eval_symbol(g, ctx)
                        self.assertEqual(identity(ctx), compose(p, p))
                        self.assertEqual(p, inverse(p))

    def test_type_d_products_keep_even_sign_count(self):
        rng = random.Random(11)
        ctx = GroupContext.of("D", 6)
        symbols = [rb2()] + [r(k) for k in range(2, 7)]
        for _ in range(200):
            p = eval_word(Word.of(ctx, rng.choices(symbols, k=rng.randint(0, 30))))
            self.assertEqual(0, negative_count(p) % 2)
            self.assertEqual(list(range(1, 7)), sorted(abs(v) for v in p))
