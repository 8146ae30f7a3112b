"""
Exceptions for the dualcheeger library.
"""
from typing import Any, Optional, Sequence

class DualCheegerException(Exception):
    """Base exception for the dualcheeger library."""
    pass

# Field arithmetic

class FieldError(DualCheegerException):
    """Error in ordered-field arithmetic."""
    pass

class BackendMismatchError(FieldError):
    """Operands come from different field backends."""
    pass

class DivisionByZeroError(FieldError, ZeroDivisionError):
    """Division by the zero element."""
    pass

class DomainError(FieldError):
    """Operation undefined for the given argument (e.g. square root of a negative element)."""
    pass

class NotRepresentableError(FieldError):
    """The result exists in a real-closed field but not in this backend."""
    
    def __init__(self, message: str, fallback: Any = None):
        super().__init__(message)
        self.fallback = fallback

class InfiniteElementError(FieldError):
    """A Levi-Civita number with negative exponents has no standard part."""
    pass

# Parsing

class ParseError(DualCheegerException):
    """Error when parsing field elements or graph files."""
    pass

class WeightSyntaxError(ParseError):
    """Syntax error in a weight expression."""
    
    def __init__(self, message: str, text: str = '', position: int = 0,
                 expected: Optional[Sequence[str]] = None):
        self.text = text
        self.position = position
        self.expected = list(expected or [])
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected {' or '.join(self.expected)})"
        super().__init__(detail)

class GraphFileError(ParseError):
    """Error in the structure of a graph file."""
    pass

class DuplicateEdgeError(GraphFileError):
    """An unordered vertex pair is listed more than once."""
    pass

class SelfLoopError(GraphFileError):
    """An edge joins a vertex to itself."""
    pass

class NonPositiveWeightError(GraphFileError):
    """An edge weight is not strictly positive."""
    pass

class MalformedWeightError(GraphFileError):
    """An edge weight does not parse."""
    pass

class DuplicateVertexError(GraphFileError):
    """A vertex label is listed more than once."""
    pass

# Graph model

class GraphError(DualCheegerException):
    """Error in graph construction or queries."""
    pass

class UnknownVertexError(GraphError, GraphFileError):
    """A vertex label or index is not part of the graph."""
    pass

class IsolatedVertexError(GraphError):
    """Operation requires a graph without isolated vertices."""
    pass

class OverlappingSubsetsError(GraphError):
    """Vertex subsets were required to be disjoint."""
    pass

class TooManyVerticesError(GraphError):
    """Graph exceeds the supported number of vertices."""
    pass

# Spectral computations

class SpectralError(DualCheegerException):
    """Error in Laplacian or eigenvalue computations."""
    pass

class DimensionMismatchError(SpectralError):
    """Function and matrix dimensions differ."""
    pass

class ZeroVectorError(SpectralError):
    """An eigenfunction candidate is identically zero."""
    pass

class LiftingError(SpectralError):
    """Newton lifting of a root did not converge."""
    pass

class ConvergenceError(SpectralError):
    """An iterative float solver did not converge."""
    pass

# Cheeger constants

class CheegerError(DualCheegerException):
    """Error in Cheeger-constant computations."""
    pass

class EdgelessGraphError(CheegerError):
    """The graph has no edges."""
    pass

class EnumerationLimitError(CheegerError):
    """Exhaustive enumeration would exceed the vertex cap."""
    pass

class EmptyPositiveSetError(CheegerError):
    """The function has no strictly positive values."""
    pass

class FullPositiveSetError(CheegerError):
    """The function is strictly positive on every vertex."""
    pass

# Configuration

class ConfigError(DualCheegerException):
    """Error in configuration."""
    pass

class ValidationError(DualCheegerException):
    """Error when validating parameters."""
    pass
