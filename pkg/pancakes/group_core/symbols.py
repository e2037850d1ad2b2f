import re
from enum import Enum
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator

from pancakes.group_core.context import GroupContext, GroupType

TOKEN_PATTERN = re.compile(r"^(?:(rb2)|(s0p)|r(\d+)|s(\d+))$")


class InvalidSymbolForContext(ValueError):
    pass


class SymbolFamily(str, Enum):
    R = "R"
    RBAR2 = "RBar2"
    S = "S"
    S0 = "S0"
    S0_PRIME = "S0Prime"


class GeneratorSymbol(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: SymbolFamily
    index: Optional[int] = None

    @model_validator(mode='after')
    def index_matches_family(self):
        indexed = self.family in (SymbolFamily.R, SymbolFamily.S)
        if indexed and self.index is None:
            raise ValueError(f'{self.family.value} needs an index')
        if not indexed and self.index is not None:
            raise ValueError(f'{self.family.value} takes no index')
        if self.family == SymbolFamily.S and self.index < 1:
            raise ValueError('use S0 for s0')
        return self

    @property
    def token(self) -> str:
        if self.family == SymbolFamily.R:
            return f"r{self.index}"
        if self.family == SymbolFamily.S:
            return f"s{self.index}"
        return {
            SymbolFamily.RBAR2: "rb2",
            SymbolFamily.S0: "s0",
            SymbolFamily.S0_PRIME: "s0p",
        }[self.family]

    @property
    def is_pancake(self) -> bool:
        return self.family in (SymbolFamily.R, SymbolFamily.RBAR2)

    @classmethod
    def from_token(cls, token: str) -> "GeneratorSymbol":
        match = TOKEN_PATTERN.match(token)
        if not match:
            raise ValueError(f"unknown generator token '{token}'")
        bar, prime, r_index, s_index = match.groups()
        if bar:
            return rb2()
        if prime:
            return s0p()
        if r_index is not None:
            return r(int(r_index))
        return s(int(s_index))

    def is_valid_in(self, ctx: GroupContext) -> bool:
        n = ctx.degree
        if self.family == SymbolFamily.R:
            low = 1 if ctx.group_type == GroupType.TYPE_B else 2
            return low <= self.index <= n
        if self.family == SymbolFamily.S:
            return 1 <= self.index <= n - 1
        if self.family == SymbolFamily.S0:
            return ctx.group_type == GroupType.TYPE_B
        # RBar2 and S0Prime both move the first two positions
        return ctx.group_type == GroupType.TYPE_D and n >= 2

    def check_context(self, ctx: GroupContext):
        if not self.is_valid_in(ctx):
            raise InvalidSymbolForContext(f"generator {self.token} is not valid in context {ctx}")
        return self

    def __str__(self):
        return self.token


@lru_cache(maxsize=None)
def r(k: int) -> GeneratorSymbol:
    return GeneratorSymbol(family=SymbolFamily.R, index=k)


@lru_cache(maxsize=None)
def s(i: int) -> GeneratorSymbol:
    if i == 0:
        return s0()
    return GeneratorSymbol(family=SymbolFamily.S, index=i)


@lru_cache(maxsize=None)
def rb2() -> GeneratorSymbol:
    return GeneratorSymbol(family=SymbolFamily.RBAR2)


@lru_cache(maxsize=None)
def s0() -> GeneratorSymbol:
    return GeneratorSymbol(family=SymbolFamily.S0)


@lru_cache(maxsize=None)
def s0p() -> GeneratorSymbol:
    return GeneratorSymbol(family=SymbolFamily.S0_PRIME)
