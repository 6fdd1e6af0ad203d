"""
Collection of exception classes for the CR workbench.
"""


class ExactArithmeticError(Exception):
    """An exact scalar operation has no result (eg. inverting zero)."""

    def __init__(self, msg):
        self.msg = msg

    def __str__(self):
        return self.msg


class DimensionMismatch(Exception):
    """Vectors, matrices or subspaces of incompatible sizes were combined."""

    def __init__(self, what, expected, got):
        self.what = what
        self.expected = expected
        self.got = got

    def __str__(self):
        return f"Dimension mismatch in {self.what}: expected {self.expected}, got {self.got}"


class InvalidStructure(Exception):
    """A structural gate (Jacobi, grading, involution, subalgebra) rejected its input."""

    def __init__(self, report):
        self.report = report

    def __str__(self):
        return str(self.report)


class PreconditionError(Exception):
    """An operation was called outside its domain."""

    def __init__(self, msg):
        self.msg = msg

    def __str__(self):
        return self.msg


class NonStabilization(Exception):
    """The Freeman sequence did not become stationary within the step cap."""

    def __init__(self, max_steps, dims):
        self.max_steps = max_steps
        self.dims = dims

    def __str__(self):
        dims = ", ".join(str(d) for d in self.dims)
        return f"Freeman sequence not stable after {self.max_steps} steps (dims: {dims})"


class PartialComplexStructureError(Exception):
    """The defining equation X + iY in f has no solution, or no unique one."""

    def __init__(self, msg):
        self.msg = msg

    def __str__(self):
        return "No partial complex structure: " + self.msg


class DegreeBoundExceeded(Exception):
    """A vector field handed to a verification suite has too large a degree."""

    def __init__(self, name, degree, bound):
        self.name = name
        self.degree = degree
        self.bound = bound

    def __str__(self):
        return f"Field '{self.name}' has degree {self.degree}, above the bound {self.bound}"


class InvalidDocument(Exception):
    """A CR algebra document could not be turned into a valid CR algebra."""

    def __init__(self, path, details):
        self.path = path
        self.details = details

    def __str__(self):
        return f"Invalid CR algebra document {self.path}:\n{self.details}"


class UsageError(Exception):
    """Bad command line flags."""

    def __init__(self, msg):
        self.msg = msg

    def __str__(self):
        return self.msg
