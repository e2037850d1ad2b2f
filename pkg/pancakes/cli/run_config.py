import os
from enum import Enum
from typing import ClassVar, Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from pancakes.group_core.context import GroupContext, GroupType
from pancakes.presentations.export import ExportFormat
from pancakes.presentations.presentation import PresentationFamily


class Command(str, Enum):
    PRESENT = "present"
    VERIFY = "verify"
    ORDER = "order"
    TC = "tc"
    KB = "kb"
    REDUCE = "reduce"
    SORT = "sort"
    EXPORT = "export"
    LEMMAS = "lemmas"
    SWEEP = "sweep"


class OutputMode(str, Enum):
    TEXT = "text"
    JSON = "json"


class RunConfig(BaseModel):
    """One validated command line; caps default to ``default_config`` merged with the environment."""
    model_config = ConfigDict(frozen=True)

    default_config: ClassVar[dict] = {
        "bfsCap": 2000000,
        "maxCosets": 5000000,
        "maxRules": 20000,
        "maxLen": 64,
        "workers": 4,
    }
    environment_keys: ClassVar[dict] = {
        "bfsCap": "PANCAKES_BFS_CAP",
        "maxCosets": "PANCAKES_MAX_COSETS",
        "maxRules": "PANCAKES_MAX_RULES",
        "maxLen": "PANCAKES_MAX_LEN",
        "workers": "PANCAKES_WORKERS",
    }

    command: Command
    group_type: Optional[GroupType] = None
    degree: Optional[int] = None
    family: PresentationFamily = PresentationFamily.PANCAKE
    output: OutputMode = OutputMode.TEXT
    bfs_cap: int = default_config["bfsCap"]
    max_cosets: int = default_config["maxCosets"]
    max_rules: int = default_config["maxRules"]
    max_len: int = default_config["maxLen"]
    workers: int = default_config["workers"]
    word: Optional[str] = None
    permutation: Optional[str] = None
    subgroup: tuple[str, ...] = ()
    export_format: ExportFormat = ExportFormat.JSON
    output_file: Optional[str] = None
    rules_file: Optional[str] = None

    @classmethod
    def defaults(cls, environ=None) -> dict:
        environ = os.environ if environ is None else environ
        config = cls.default_config.copy()
        for key, variable in cls.environment_keys.items():
            if environ.get(variable):
                try:
                    config[key] = int(environ[variable])
                except ValueError:
                    raise ValueError(f"{variable} must be an integer, got {environ[variable]!r}") from None
        return config

    @field_validator('degree', 'bfs_cap', 'max_cosets', 'max_rules', 'max_len', 'workers')
    @classmethod
    def must_be_positive(cls, value):
        if value is not None and value < 1:
            raise ValueError(f'must be positive, got {value}')
        return value

    @model_validator(mode='after')
    def command_fields_present(self):
        if self.command == Command.SWEEP:
            return self
        if self.command == Command.SORT:
            if self.group_type is None or self.permutation is None:
                raise ValueError('sort needs --type and --perm')
            return self
        if self.group_type is None or self.degree is None:
            raise ValueError(f'{self.command.value} needs --type and --n')
        if self.command == Command.REDUCE and self.word is None:
            raise ValueError('reduce needs --word')
        return self

    @property
    def context(self) -> GroupContext:
        return GroupContext(group_type=self.group_type, degree=self.degree)

    @property
    def is_json(self) -> bool:
        return self.output == OutputMode.JSON
