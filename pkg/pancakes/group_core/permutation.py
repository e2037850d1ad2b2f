import re

from pancakes.utils.utils import join

WINDOW_PATTERN = re.compile(r"^\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]\s*$")


class InvalidPermutation(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


class SignedPermutation(tuple):
    """
    Element of B_n in window notation: entry ``i`` is the signed value at position ``i``.
    Unsigned permutations are the windows without negative entries.

    Instances are tuples, so they hash and compare by window and can be used directly as
    closure-set keys.
    """

    def __new__(cls, window=()):
        window = tuple(int(v) for v in window)
        if sorted(abs(v) for v in window) != list(range(1, len(window) + 1)):
            raise InvalidPermutation(f"{list(window)} is not a signed permutation of 1..{len(window)}")
        return super().__new__(cls, window)

    @classmethod
    def trusted(cls, window) -> "SignedPermutation":
        """Wrap a window already known to be bijective (engine hot paths)."""
        return tuple.__new__(cls, window)

    @classmethod
    def identity(cls, degree: int) -> "SignedPermutation":
        return cls.trusted(range(1, degree + 1))

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        match = WINDOW_PATTERN.match(text)
        if not match:
            raise InvalidPermutation(f"'{text}' is not a window such as [-2,-1,3,4]")
        body = match.group(1)
        values = [int(v) for v in body.split(",")] if body else []
        return cls(values)

    @property
    def degree(self) -> int:
        return len(self)

    def negative_count(self) -> int:
        return sum(1 for v in self if v < 0)

    def is_unsigned(self) -> bool:
        return all(v > 0 for v in self)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self, start=1))

    def __str__(self):
        return f"[{join(self, ',')}]"

    def __repr__(self):
        return f"SignedPermutation({list(self)})"


def compose(p: SignedPermutation, q: SignedPermutation) -> SignedPermutation:
    """Perform ``p``'s rearrangement, then ``q``'s: position ``i`` receives ``sign(q_i) * p[|q_i|]``."""
    if len(p) != len(q):
        raise DegreeMismatch(f"cannot compose degree {len(p)} with degree {len(q)}")
    return SignedPermutation.trusted(p[v - 1] if v > 0 else -p[-v - 1] for v in q)


def inverse(p: SignedPermutation) -> SignedPermutation:
    window = [0] * len(p)
    for position, value in enumerate(p, start=1):
        if value > 0:
            window[value - 1] = position
        else:
            window[-value - 1] = -position
    return SignedPermutation.trusted(window)


def negative_count(p: SignedPermutation) -> int:
    return sum(1 for v in p if v < 0)
