"""
   Copyright 2024 The pinspect developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
"""
from dataclasses import dataclass
from enum import IntEnum, auto
from typing import ClassVar, Optional


class ExitStatus(IntEnum):
    SUCCESS = 0
    ESTIMATOR_ERROR = 1
    VALIDATION_ERROR = 2
    IO_ERROR = 3


class ErrorCode(IntEnum):
    INVALID_INPUT = auto()
    INVALID_PARTITION = auto()
    CONFIGURATION = auto()
    HORIZON_INSUFFICIENT = auto()
    DEGENERATE_NORMALIZATION = auto()

    @property
    def exit_status(self) -> ExitStatus:
        """
        The process exit status the command line reports for this code.
        Estimation failures on valid data are told apart from rejected inputs.
        """
        if self in (ErrorCode.HORIZON_INSUFFICIENT, ErrorCode.DEGENERATE_NORMALIZATION):
            return ExitStatus.ESTIMATOR_ERROR
        return ExitStatus.VALIDATION_ERROR


@dataclass
class PinspectError(Exception):
    """
    Base of every error raised by ``pinspect``.

    Each concrete error has a class-level :class:`ErrorCode`, which is what the
    command line prints as its machine-readable error identifier.
    """

    message: str = ""
    code: ClassVar[ErrorCode] = ErrorCode.INVALID_INPUT

    def __str__(self):
        return f"[{self.code.name}] {self.message}"


@dataclass
class InvalidInputError(PinspectError):
    code: ClassVar[ErrorCode] = ErrorCode.INVALID_INPUT


@dataclass
class ConfigurationError(PinspectError):
    code: ClassVar[ErrorCode] = ErrorCode.CONFIGURATION


@dataclass
class InvalidPartitionError(PinspectError):
    """
    The observation horizon ``T`` cannot be cut into a whole number of
    inspection intervals of length ``t``.
    """

    horizon: float = 0.0
    interval: float = 0.0
    code: ClassVar[ErrorCode] = ErrorCode.INVALID_PARTITION

    def __post_init__(self):
        if not self.message:
            self.message = (f"horizon {self.horizon} is not a whole multiple of the "
                            f"interval {self.interval}")


@dataclass
class HorizonInsufficientError(PinspectError):
    """
    The survival estimate never shows three consecutive zeros, so no cutoff
    ``K`` exists: the observation period is too short for how rarely events
    happen.

    ``last_zero_index`` is the largest lattice index ``k`` with a zero
    survival estimate, ``None`` if the estimate never reaches zero.
    """

    last_zero_index: Optional[int] = None
    code: ClassVar[ErrorCode] = ErrorCode.HORIZON_INSUFFICIENT

    def __post_init__(self):
        if not self.message:
            if self.last_zero_index is None:
                self.message = "survival estimate never reaches zero"
            else:
                self.message = ("no three consecutive zero survival estimates (last zero at "
                                f"index {self.last_zero_index})")


@dataclass
class DegenerateNormalizationError(PinspectError):
    """
    The trapezoid normalization would give a nonpositive (or infinite) mean:
    ``pdf_sum`` is the offending ``sum(g(kt) * t)`` for ``k = 1..K-2``.
    """

    pdf_sum: float = 0.0
    code: ClassVar[ErrorCode] = ErrorCode.DEGENERATE_NORMALIZATION

    def __post_init__(self):
        if not self.message:
            self.message = f"pdf mass {self.pdf_sum!r} leaves no room for g(0)"
