"""Exception hierarchy. Every class carries a stable ``code`` used by the CLI."""


class RieszError(Exception):
    code = "riesz-error"


class DomainError(RieszError, ValueError):
    code = "domain-error"


class UnsupportedParameterError(RieszError, ValueError):
    code = "unsupported-parameter"


class DegenerateConfigurationError(RieszError, ValueError):
    code = "degenerate-configuration"


class ResourceLimitError(RieszError):
    code = "resource-limit"


class SearchFailureError(RieszError):
    code = "search-failure"
