from pydantic import BaseModel, ConfigDict

from pancakes.group_core.context import GroupContext
from pancakes.group_core.symbols import GeneratorSymbol
from pancakes.group_core.words import Word
from pancakes.presentations.presentation import Presentation


class SymbolOrder(BaseModel):
    """
    Total order on a generator alphabet, smallest first.

    Words are encoded as strings with one character per symbol so that plain string
    comparison of equal-length encodings is the lexicographic part of shortlex.
    """
    model_config = ConfigDict(frozen=True)

    context: GroupContext
    symbols: tuple[GeneratorSymbol, ...]

    def __init__(self, **data):
        super().__init__(**data)
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"symbol order repeats a generator: {[g.token for g in self.symbols]}")
        for symbol in self.symbols:
            symbol.check_context(self.context)

    @classmethod
    def canonical(cls, p: Presentation) -> "SymbolOrder":
        return cls(context=p.context, symbols=p.generators)

    @classmethod
    def from_tokens(cls, ctx: GroupContext, tokens) -> "SymbolOrder":
        return cls(context=ctx, symbols=Word.from_tokens(ctx, tokens).symbols)

    def letter(self, symbol: GeneratorSymbol) -> str:
        try:
            return chr(ord('a') + self.symbols.index(symbol))
        except ValueError:
            raise ValueError(f"{symbol.token} is not in the alphabet {self.tokens()}") from None

    def symbol(self, letter: str) -> GeneratorSymbol:
        return self.symbols[ord(letter) - ord('a')]

    def encode(self, w: Word) -> str:
        return "".join(self.letter(g) for g in w.symbols)

    def decode(self, text: str) -> Word:
        return Word.of(self.context, (self.symbol(c) for c in text))

    def letters(self) -> str:
        return "".join(chr(ord('a') + rank) for rank in range(len(self.symbols)))

    def tokens(self) -> list[str]:
        return [g.token for g in self.symbols]


def shortlex_key(text: str):
    return len(text), text
