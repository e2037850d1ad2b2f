from enum import Enum
from math import factorial

from pydantic import BaseModel, ConfigDict

from pancakes.group_core.context import GroupContext, GroupType
from pancakes.group_core.symbols import GeneratorSymbol
from pancakes.group_core.words import Word


class PresentationFamily(str, Enum):
    PANCAKE = "pancake"
    COXETER = "coxeter"


class PresentationFormatError(ValueError):
    pass


class RelatorEntry(BaseModel):
    """One relator together with its family label and the index tuple it was generated from."""
    model_config = ConfigDict(frozen=True)

    label: str
    indices: tuple[int, ...] = ()
    word: Word

    def describe(self) -> str:
        if self.indices:
            return f"{self.label}{self.indices}"
        return self.label


class Presentation(BaseModel):
    model_config = ConfigDict(frozen=True)

    context: GroupContext
    family: PresentationFamily
    generators: tuple[GeneratorSymbol, ...]
    relators: tuple[RelatorEntry, ...] = ()

    def __init__(self, **data):
        super().__init__(**data)
        allowed = set(self.generators)
        for generator in self.generators:
            generator.check_context(self.context)
        for entry in self.relators:
            if entry.word.context != self.context:
                raise PresentationFormatError(f"relator {entry.describe()} belongs to context {entry.word.context}")
            foreign = [s.token for s in entry.word.symbols if s not in allowed]
            if foreign:
                raise PresentationFormatError(f"relator {entry.describe()} uses {foreign} outside the generators "
                                              f"{[g.token for g in self.generators]}")

    @property
    def labels(self) -> list[str]:
        return [entry.label for entry in self.relators]

    @property
    def words(self) -> list[Word]:
        return [entry.word for entry in self.relators]

    def generator_tokens(self) -> list[str]:
        return [g.token for g in self.generators]

    def with_relator(self, position: int, word: Word) -> "Presentation":
        relators = list(self.relators)
        relators[position] = relators[position].model_copy(update={"word": word})
        return self.model_copy(update={"relators": tuple(relators)})

    def with_lowered_exponent(self, position: int) -> "Presentation":
        """Replace relator ``base^m`` at ``position`` by ``base^(m-1)``; used for fault injection."""
        relator = self.relators[position].word
        if relator_exponent(relator) < 2:
            raise ValueError(f"relator {self.relators[position].describe()} is not a proper power")
        return self.with_relator(position, relator[:len(relator) - minimal_period(relator)])

    def __str__(self):
        gens = ", ".join(self.generator_tokens())
        return f"<{gens} | {len(self.relators)} relators> ({self.family.value} {self.context})"


class ExpectedOrder(BaseModel):
    model_config = ConfigDict(frozen=True)

    context: GroupContext
    value: int


def expected_order(ctx: GroupContext) -> ExpectedOrder:
    n = ctx.degree
    if ctx.group_type == GroupType.TYPE_A:
        value = factorial(n)
    elif ctx.group_type == GroupType.TYPE_B:
        value = 2 ** n * factorial(n)
    else:
        value = 2 ** (n - 1) * factorial(n)
    return ExpectedOrder(context=ctx, value=value)


def minimal_period(w: Word) -> int:
    """Length of the shortest ``base`` with ``w == base^m``."""
    symbols = w.symbols
    size = len(symbols)
    for period in range(1, size + 1):
        if size % period == 0 and symbols == symbols[:period] * (size // period):
            return period
    return size


def relator_exponent(w: Word) -> int:
    if not w.symbols:
        return 0
    return len(w) // minimal_period(w)
