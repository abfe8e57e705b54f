"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CliqueRegError(Exception):
    """Base class for all library errors."""


class EmptyGraphError(CliqueRegError, ValueError):
    """A graph with zero vertices was requested."""


class EmptyEdgeSetError(CliqueRegError, ValueError):
    """The operation needs at least one edge (not clique regular for any omega)."""


class NotCliqueRegularError(CliqueRegError, ValueError):
    def __init__(self, omega: int, detail: str = ""):
        self.omega = omega
        msg = f"graph is not {omega}-clique regular"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class HypothesisError(CliqueRegError, ValueError):
    """Input does not satisfy the hypotheses of the requested check."""


class NotRCAError(HypothesisError):
    pass


class DisconnectedGraphError(HypothesisError):
    pass


class BoringParametersError(HypothesisError):
    pass


class ParameterError(CliqueRegError, ValueError):
    """Parameter tuple violates a basic identity or range requirement."""


class SizeGuardError(CliqueRegError):
    pass


class ParseError(CliqueRegError, ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")
