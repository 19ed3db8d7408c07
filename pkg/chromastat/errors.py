"""Errors raised by chromastat, with the exit code the CLI maps them to."""
from . import vocabulary as vb


class Error(Exception):
    """Generic error for chromastat"""
    exit_code = 2

    def __init__(self, message, exit_code=None, payload=None):
        super().__init__(message)
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        self.payload = payload

    def __str__(self):
        return str(self.message)

    def to_dict(self):
        rv = dict(self.payload or ())
        rv[vb.ERROR] = self.message
        rv[vb.ERROR_KIND] = type(self).__name__
        rv[vb.EXIT_CODE] = self.exit_code
        return rv


class ParseError(Error):
    """ParseError"""
    def __init__(self, message=None, line=None, text=None):
        super().__init__(message, payload={vb.LINE: line} if line is not None else None)
        self.line = line
        if line is not None:
            self.message = f"line {line}: {message}"
            if text is not None:
                self.message += f" ('{text.strip()}')"


class GraphError(Error):
    """GraphError"""


class FamilyParameterError(Error):
    """FamilyParameterError"""
    def __init__(self, message=None, family=None, parameter=None, minimum=None):
        super().__init__(message)
        if message:
            self.message = message
        else:
            self.message = f"'{family}' requires '{parameter}' >= {minimum}"


class ChromaticMismatchError(Error):
    """ChromaticMismatchError"""
    def __init__(self, message=None, k=None, chi=None):
        super().__init__(message)
        if message:
            self.message = message
        else:
            self.message = f"k={k} was requested but the chromatic number is {chi}"


class FormulaUnavailableError(Error):
    """FormulaUnavailableError"""


class InstanceTooLargeError(Error):
    """InstanceTooLargeError"""
    exit_code = 3

    def __init__(self, message=None, n=None, limit=None, what="engine"):
        super().__init__(message, payload={vb.N: n, vb.LIMIT: limit})
        if message:
            self.message = message
        else:
            self.message = f"instance too large: {n} vertices exceeds the {what} limit of {limit}"


class VerificationMismatchError(Error):
    """VerificationMismatchError"""
    exit_code = 4

    def __init__(self, message=None, failures=None):
        super().__init__(message, payload={vb.FAILURES: failures})
        if message:
            self.message = message
        else:
            self.message = f"{failures} verification case(s) failed"
