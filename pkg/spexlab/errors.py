#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Every failure raised on purpose by spexlab derives from `SpexlabError`, so
the command line can tell our own errors apart from genuine bugs.
"""

# Built-in modules
from typing import Any


###############################################################################
class SpexlabError(Exception):
    pass


class InvalidVertex(SpexlabError, ValueError):
    pass


class LoopRejected(SpexlabError, ValueError):
    pass


class CapacityExceeded(SpexlabError, ValueError):
    """A graph would need more than 64 vertices in explicit form."""


class InvalidParameters(SpexlabError, ValueError):
    pass


class ParseError(SpexlabError, ValueError):
    pass


class NotBipartite(SpexlabError):
    pass


class EmptyForbiddenGraph(SpexlabError):
    pass


class LemmaInapplicable(SpexlabError):
    """The vertex-split description of the decomposition family needs
    2 <= chi(F) <= p - 1."""


class EmptyFamily(SpexlabError):
    pass


class InternalInvariantViolation(SpexlabError):
    pass


class ConvergenceFailure(SpexlabError):
    pass


###############################################################################
class BudgetExceeded(SpexlabError):
    """
    An exhaustive computation was asked to go beyond its size budget.
    Whatever was computed before giving up is kept in `partial` so that
    the caller can still report it.
    """

    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial
