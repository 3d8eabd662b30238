"""Exception types shared across the toolkit."""


class MpiAssistError(Exception):
    """Base class for all toolkit errors."""


class EncodingError(MpiAssistError):
    """Source bytes are not valid UTF-8."""


class ParseError(MpiAssistError):
    def __init__(self, message, line, col):
        super().__init__(f"{message} (line {line}, col {col})")
        self.line = line
        self.col = col


class EmbeddedCall(MpiAssistError):
    """An MPI call is a subexpression of a larger statement and cannot be
    pruned by statement deletion."""

    def __init__(self, name, line):
        super().__init__(f"embedded MPI call {name} at line {line}")
        self.name = name
        self.line = line


class NoMain(MpiAssistError):
    """The program has no main function definition."""


class FormatError(MpiAssistError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.line = line


class DuplicateId(MpiAssistError):
    def __init__(self, record_id):
        super().__init__(f"duplicate prediction id {record_id!r}")
        self.record_id = record_id


class MissingPrediction(MpiAssistError):
    def __init__(self, record_id):
        super().__init__(f"no prediction for dataset id {record_id!r}")
        self.record_id = record_id


class HttpError(MpiAssistError):
    def __init__(self, status, body):
        super().__init__(f"HTTP {status}: {body[:200]}")
        self.status = status
        self.body = body


class RateLimited(MpiAssistError):
    def __init__(self, retry_after):
        super().__init__(f"rate limited, retry after {retry_after}s")
        self.retry_after = retry_after


class CompileError(MpiAssistError):
    def __init__(self, diagnostics):
        super().__init__(f"compilation failed:\n{diagnostics}")
        self.diagnostics = diagnostics


class RunError(MpiAssistError):
    def __init__(self, exit_code, stderr=""):
        super().__init__(f"run failed with exit code {exit_code}")
        self.exit_code = exit_code
        self.stderr = stderr


class BenchTimeout(MpiAssistError):
    def __init__(self, seconds):
        super().__init__(f"execution exceeded {seconds}s")
        self.seconds = seconds
