#!/usr/bin/env python3
"""
Exception hierarchy for covpovm.

Every error carries a human readable message and a ``details`` dict with the
offending objects (element triple, irrep pair, witness, JSON pointer, ...).
"""

from typing import Any, Dict, Optional


class CovPovmError(Exception):
    """Base class for all covpovm errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InputError(CovPovmError):
    """Input could not be interpreted (exit code 1 on the CLI)."""


class ValidationError(CovPovmError):
    """Input was read but is not a valid member of its class (exit code 2)."""


# group-core
class NotAGroup(ValidationError):
    pass


class NotASubgroup(ValidationError):
    pass


class NotUnitary(ValidationError):
    pass


class NotHomomorphism(ValidationError):
    pass


class Reducible(ValidationError):
    pass


class EquivalentPair(ValidationError):
    pass


class NotAbelian(ValidationError):
    pass


class CharacterNotInAnnihilator(ValidationError):
    pass


# rep-system
class ShapeMismatch(InputError):
    pass


class UnsupportedIrrep(InputError):
    pass


# kernel
class IsometryViolation(ValidationError):
    pass


class AuxTooSmall(InputError):
    pass


class SystemMismatch(InputError):
    pass


class BadWeight(InputError):
    pass


class InvalidKernel(ValidationError):
    pass


# povm
class InvalidPovm(ValidationError):
    pass


class NotPositive(ValidationError):
    pass


class NotHCommuting(ValidationError):
    pass


class NotNormalized(ValidationError):
    pass


class NotAState(ValidationError):
    pass


# extremal
class NonUnitaryLift(ValidationError):
    pass


class InternalInconsistency(CovPovmError):
    """The two extremality criteria disagree; the rank threshold is suspect."""


class ZeroPerturbation(InputError):
    pass


class NotInPerturbationSpace(ValidationError):
    pass


# rank1
class CertificateViolation(ValidationError):
    pass


# cli-io
class UnknownSubcommand(InputError):
    pass


class FileError(InputError):
    pass


class SchemaError(InputError):
    def __init__(self, message: str, pointer: str = "", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, {**(details or {}), "pointer": pointer})
        self.pointer = pointer


class UnknownFixture(InputError):
    pass


class UsageError(InputError):
    """Command line arguments could not be parsed."""
