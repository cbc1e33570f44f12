"""Typed errors with stable machine-readable codes."""

from __future__ import annotations


class GovTraceError(Exception):
    """Base class; every error carries a stable ``code`` string."""

    code = "INTERNAL_ERROR"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class NonFiniteNumberError(GovTraceError):
    code = "NON_FINITE_NUMBER"


class MalformedEventError(GovTraceError):
    code = "MALFORMED_EVENT"


class InvalidEventError(GovTraceError):
    """Raised when an event rejected by validation is appended to a log."""

    code = "INVALID_EVENT"

    def __init__(self, message: str = "", violations=None):
        super().__init__(message)
        self.violations = list(violations or [])


class CyclicTraceError(GovTraceError):
    code = "CYCLIC_TRACE"


class DuplicateEventIdError(GovTraceError):
    code = "DUPLICATE_EVENT_ID"


class DuplicateCorrelationIdError(GovTraceError):
    code = "DUPLICATE_CORRELATION_ID"


class UnknownComponentError(GovTraceError):
    code = "UNKNOWN_COMPONENT"


class AttributionImpossibleError(GovTraceError):
    """No delegation-record path connects the producing event to a root.

    This is a categorical failure: callers never receive a partial or
    guessed chain.
    """

    code = "ATTRIBUTION_IMPOSSIBLE"


class WindowTooSmallError(GovTraceError):
    code = "WINDOW_TOO_SMALL"


class InvalidConfigError(GovTraceError):
    code = "INVALID_CONFIG"


class InvalidFaultError(GovTraceError):
    code = "INVALID_FAULT"
