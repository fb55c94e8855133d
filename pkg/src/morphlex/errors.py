"""Exception types shared across the package."""


class MorphlexError(Exception):
    """Base class for all package errors."""


class ResourceFormatError(MorphlexError):
    """A resource file does not conform to its on-disk format.

    Carries the offending path and 1-based line number so command-line
    diagnostics can point at the exact row.
    """

    def __init__(self, path, line_no, message):
        self.path = str(path)
        self.line_no = line_no
        super().__init__(f"{self.path}:{line_no}: {message}")


class ConfigurationError(MorphlexError):
    """A run configuration is incomplete or inconsistent."""
