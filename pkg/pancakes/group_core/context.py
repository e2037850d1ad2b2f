from enum import Enum

from pydantic import BaseModel, ConfigDict, field_validator


class GroupType(str, Enum):
    TYPE_A = "A"
    TYPE_B = "B"
    TYPE_D = "D"


class DegreeTooSmall(ValueError):
    pass


class GroupContext(BaseModel):
    """
    Group type and degree every symbol, word and presentation is interpreted in.

    Arithmetic works for any positive degree; the prefix-reversal presentations are only
    claimed for degree n > 3 and the operations built on them call
    ``require_presentation_degree()`` first.
    """
    model_config = ConfigDict(frozen=True)

    group_type: GroupType
    degree: int

    @field_validator('degree')
    @classmethod
    def degree_is_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f'degree must be positive, got {value}')
        return value

    @classmethod
    def of(cls, group_type, degree) -> "GroupContext":
        return cls(group_type=GroupType(group_type), degree=degree)

    def require_presentation_degree(self):
        if self.degree <= 3:
            raise DegreeTooSmall(f"the prefix-reversal presentation of type {self.group_type.value} "
                                 f"requires degree n > 3, got n={self.degree}")
        return self

    def require_degree(self, minimum):
        if self.degree < minimum:
            raise DegreeTooSmall(f"type {self.group_type.value} requires degree n >= {minimum}, "
                                 f"got n={self.degree}")
        return self

    def __str__(self):
        return f"{self.group_type.value}{self.degree}"
