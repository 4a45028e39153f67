#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""errors.py

Exception hierarchy shared by every module. All of them derive from
``LatticeError`` (a ``ValueError``) so callers can catch the whole family
with one clause; messages always name the violated constraint.
"""

from __future__ import annotations

from typing import Optional, Sequence


class LatticeError(ValueError):
    """Base class for every error raised by the lattice engine."""


# --- poset_core ---

class InvalidBox(LatticeError):
    pass


class NotWeaklyDecreasing(LatticeError):
    pass


class OutOfBox(LatticeError):
    pass


class WrongLength(LatticeError):
    pass


class RankOutOfRange(LatticeError):
    pass


class CrossCheckFailure(LatticeError):
    """Two independent computations of the same quantity disagree."""


# --- order_matching_l3 ---

class NotInDomain(LatticeError):
    pass


class NotInRange(LatticeError):
    pass


class ExhaustiveCaseViolation(LatticeError):
    """A case analysis that must be exhaustive let a value through."""


# --- chain_decomposition ---

class NotAStart(LatticeError):
    pass


class ClassificationFailure(LatticeError):
    pass


class NotSaturated(LatticeError):
    pass


class DecompositionInvalid(LatticeError):
    pass


# --- recursive_udec ---

class KneadFailure(LatticeError):
    pass


class RecUDFailure(LatticeError):
    def __init__(self, message: str, alpha: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.alpha = tuple(alpha) if alpha is not None else None
