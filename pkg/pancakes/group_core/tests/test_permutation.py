from unittest import TestCase

from pancakes.group_core.permutation import (SignedPermutation, InvalidPermutation, DegreeMismatch, compose,
                                             inverse, negative_count)


class SignedPermutationTest(TestCase):

    def test_window_must_be_bijective(self):
        for window in ([1, 1, 3], [0, 1, 2], [1, 2, 4], [-1, 1]):
            with self.subTest(window=window):
                with self.assertRaises(InvalidPermutation):
                    SignedPermutation(window)

    def test_parse_and_render_window(self):
        p = SignedPermutation.parse("[-2, -1, 3,4]")
        self.assertEqual((-2, -1, 3, 4), p)
        self.assertEqual("[-2,-1,3,4]", str(p))

    def test_parse_rejects_malformed_text(self):
        for text in ("-2,-1,3", "[a,b]", "[1,2"):
            with self.subTest(text=text):
                with self.assertRaises(InvalidPermutation):
                    SignedPermutation.parse(text)

    def test_parse_empty_window(self):
        self.assertEqual((), SignedPermutation.parse("[]"))

    def test_negative_count(self):
        self.assertEqual(0, negative_count(SignedPermutation([1, 2, 3])))
        self.assertEqual(2, negative_count(SignedPermutation([-2, -1, 3, 4])))
        self.assertEqual(1, SignedPermutation([-1, 2, 3]).negative_count())

    def test_is_identity(self):
        self.assertTrue(SignedPermutation.identity(4).is_identity())
        self.assertFalse(SignedPermutation([-1, 2, 3]).is_identity())
        self.assertFalse(SignedPermutation([2, 1, 3]).is_identity())
        self.assertTrue(SignedPermutation([]).is_identity())

    def test_compose_with_identity(self):
        p = SignedPermutation([3, -1, 2, 4])
        e = SignedPermutation.identity(4)
        self.assertEqual(p, compose(e, p))
        self.assertEqual(p, compose(p, e))

    def test_compose_performs_first_then_second(self):
        r3 = SignedPermutation([3, 2, 1, 4])
        r2 = SignedPermutation([2, 1, 3, 4])
        self.assertEqual((2, 3, 1, 4), compose(r3, r2))

    def test_compose_rejects_degree_mismatch(self):
        with self.assertRaises(DegreeMismatch):
            compose(SignedPermutation([1, 2]), SignedPermutation([1, 2, 3]))

    def test_inverse(self):
        self.assertEqual((3, 1, 2, 4), inverse(SignedPermutation([2, 3, 1, 4])))
        self.assertEqual((1, 2, 3), inverse(SignedPermutation.identity(3)))

    def test_inverse_law_on_signed_windows(self):
        for window in ([2, -3, 1], [-1, -2, -3], [-3, 1, 2], [1, 2, 3]):
            with self.subTest(window=window):
                p = SignedPermutation(window)
                e = SignedPermutation.identity(3)
                self.assertEqual(e, compose(p, inverse(p)))
                self.assertEqual(e, compose(inverse(p), p))
