import enum


__all__ = [
    "StepRule",
    "OutputFormat",
    "ExitCode",
    "ExceptionSeverity",
    "Branch",
]


class StepRule(enum.Enum):
    EUCLIDEAN = "euclidean"
    SOBOLEV = "sobolev"


class OutputFormat(enum.Enum):
    JSON = "json"
    CSV = "csv"
    OBJ = "obj"


class ExitCode(enum.IntEnum):
    OK = 0
    CHECK_FAILED = 1
    USAGE = 2


class ExceptionSeverity(enum.Enum):
    COMMON = "common"
    FATAL = "fatal"


class Branch(enum.Enum):
    RIGHT = "right"
    LEFT = "left"
