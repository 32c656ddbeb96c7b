"""Exception hierarchy shared across the toolkit."""


class DtpnError(Exception):
    """Base class for all toolkit errors."""


class EvalError(DtpnError):
    """Expression evaluation failed (unbound symbol, division by zero,
    type mismatch), usually naming the offending transition."""


class ModelError(DtpnError):
    """Ill-formed net or invalid interval produced by interval expressions."""


class ChooserError(DtpnError):
    """A date chooser could not produce a date (e.g. latest on [a, inf))."""


class ElapseError(DtpnError):
    """Time elapse would drive some firing date negative."""


class DomainMismatchError(DtpnError):
    """A domain operation referenced a transition outside the domain."""


class UnboundedMaximizationError(DtpnError):
    """Numeric maximization requested over an unbounded range."""


class ClassificationError(DtpnError):
    """A fickle expression is outside the supported classes or its
    monotonicity annotation was falsified by sampling."""


class ParseError(DtpnError):
    """Model text could not be parsed; carries a list of diagnostics."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        lines = "; ".join(f"{l}:{c}: {m}" for l, c, m in self.diagnostics)
        super().__init__(lines or "parse error")


class ExpansionError(DtpnError):
    """Appendix expansion failed (net not weak, over cap, malformed state)."""
