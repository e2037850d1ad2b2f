from typing import Iterable

from pydantic import BaseModel, ConfigDict

from pancakes.group_core.context import GroupContext
from pancakes.group_core.symbols import GeneratorSymbol


class Word(BaseModel):
    """
    Finite product of generator symbols, read left to right.

    Every generator is an involution, so the inverse of a word is its reversal and no
    formal inverse letters exist.
    """
    model_config = ConfigDict(frozen=True)

    symbols: tuple[GeneratorSymbol, ...] = ()
    context: GroupContext

    def __init__(self, **data):
        super().__init__(**data)
        for symbol in self.symbols:
            symbol.check_context(self.context)

    @classmethod
    def of(cls, ctx: GroupContext, symbols: Iterable[GeneratorSymbol] = ()) -> "Word":
        return cls(symbols=tuple(symbols), context=ctx)

    @classmethod
    def from_tokens(cls, ctx: GroupContext, tokens: Iterable[str]) -> "Word":
        return cls.of(ctx, (GeneratorSymbol.from_token(t) for t in tokens))

    @classmethod
    def identity(cls, ctx: GroupContext) -> "Word":
        return cls(context=ctx)

    def tokens(self) -> list[str]:
        return [symbol.token for symbol in self.symbols]

    def render(self) -> str:
        return " ".join(self.tokens())

    def power(self, exponent: int) -> "Word":
        return Word(symbols=self.symbols * exponent, context=self.context)

    def reversed(self) -> "Word":
        return Word(symbols=tuple(reversed(self.symbols)), context=self.context)

    def is_empty(self) -> bool:
        return not self.symbols

    def __mul__(self, other: "Word") -> "Word":
        if other.context != self.context:
            raise ValueError(f"cannot concatenate words of contexts {self.context} and {other.context}")
        return Word(symbols=self.symbols + other.symbols, context=self.context)

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(symbols=self.symbols[item], context=self.context)
        return self.symbols[item]

    def __str__(self):
        return self.render() or "e"


def word(ctx: GroupContext, *symbols: GeneratorSymbol) -> Word:
    return Word.of(ctx, symbols)
