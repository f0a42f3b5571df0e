"""
File: errors.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Exceptions raised by the continua library and the experiment runner.
"""


class UltraorderError(Exception):
    """Base class for every error raised on purpose by this project."""


class DomainError(UltraorderError, ValueError):
    """An argument lies outside the domain of the operation."""


class DepthError(UltraorderError):
    """A level or coordinate beyond what the representation can compute."""


class PreconditionError(UltraorderError):
    """The stated precondition of an operation does not hold."""


class CertificateError(UltraorderError):
    """A stabilization certificate disagrees with the computed trace."""


class SearchBoundError(UltraorderError):
    """A bounded search ran out of room."""

    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


class ConfigError(UltraorderError, ValueError):
    """Malformed configuration value or command-line selector."""
