from pydantic import BaseModel, ConfigDict

from pancakes.group_core.context import GroupContext, GroupType
from pancakes.group_core.operations import flip_function
from pancakes.group_core.permutation import SignedPermutation
from pancakes.group_core.symbols import GeneratorSymbol, r
from pancakes.group_core.words import Word
from pancakes.utils.utils import int_range


class InvalidContext(ValueError):
    pass


class SignedEntryInTypeA(ValueError):
    pass


class SortCertificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    input: tuple[int, ...]
    word: Word

    @property
    def flip_count(self) -> int:
        return len(self.word)

    def to_json_dict(self) -> dict:
        return {
            "input": str(SignedPermutation.trusted(self.input)),
            "word": self.word.tokens(),
            "flip_count": self.flip_count,
        }


def flip_bound(ctx: GroupContext) -> int:
    if ctx.group_type == GroupType.TYPE_B:
        return 3 * ctx.degree
    return 2 * (ctx.degree - 1)


def greedy_sort(p: SignedPermutation, ctx: GroupContext) -> SortCertificate:
    """Bring the largest unplaced pancake to the top, then flip it into place; burnt ones are turned with r1."""
    if ctx.group_type == GroupType.TYPE_D:
        raise InvalidContext("type D arrangements are not sorted by prefix reversals")
    if len(p) != ctx.degree:
        raise InvalidContext(f"arrangement {p} does not have degree {ctx.degree}")
    if ctx.group_type == GroupType.TYPE_A and not p.is_unsigned():
        raise SignedEntryInTypeA(f"type A arrangement {p} has negative entries")
    stack = tuple(p)
    flips: list[GeneratorSymbol] = []

    def flip(k):
        nonlocal stack
        flips.append(r(k))
        stack = flip_function(r(k), ctx)(stack)

    if ctx.group_type == GroupType.TYPE_A:
        for m in int_range(2, ctx.degree)[::-1]:
            position = stack.index(m) + 1
            if position == m:
                continue
            if position > 1:
                flip(position)
            flip(m)
    else:
        for m in int_range(1, ctx.degree)[::-1]:
            if stack[m - 1] == m:
                continue
            position = [abs(v) for v in stack].index(m) + 1
            if position > 1:
                flip(position)
            if stack[0] == m:
                flip(1)
            flip(m)
    return SortCertificate(input=tuple(p), word=Word.of(ctx, flips))


def verify_certificate(c: SortCertificate, ctx: GroupContext) -> bool:
    if len(c.input) != ctx.degree or c.word.context != ctx:
        return False
    stack = tuple(c.input)
    for symbol in c.word.symbols:
        if not symbol.is_pancake:
            return False
        stack = flip_function(symbol, ctx)(stack)
    return stack == tuple(int_range(1, ctx.degree))
