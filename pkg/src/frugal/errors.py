"""Exception hierarchy shared across the toolkit.

Structural problems with inputs raise subclasses of ``GraphError``;
algorithmic preconditions and certified failures get their own classes so
callers can tell "your input is malformed" apart from "this algorithm's
hypothesis does not hold for this graph".
"""


class FrugalError(Exception):
    """Base class for every error raised by this package."""


class GraphError(FrugalError):
    """Malformed graph data."""


class LoopEdgeError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateIdError(GraphError):
    """A vertex or edge identifier occurs more than once."""


class DanglingEndpointError(GraphError):
    """An edge endpoint does not resolve to a declared vertex."""


class MissingEdgeError(GraphError):
    """An operation referenced an edge id that is not in the graph."""


class InvalidRotationError(GraphError):
    """A rotation system is not a permutation of each vertex's incident edges."""


class NonPlanarEmbeddingError(GraphError):
    """Face traversal of a rotation system fails the Euler count."""


class BudgetExhaustedError(FrugalError):
    """An exhaustive search ran out of its node budget."""


class NoLightVertexError(FrugalError):
    """No vertex matches any light-vertex case; the graph is not simple planar."""


class NotReducibleError(FrugalError):
    """No vertex matches any reducible-vertex property; the graph is not outerplanar."""


class NoLightDegree2Error(FrugalError):
    """No degree-two vertex with a small second neighbourhood exists."""


class ListTooSmallError(FrugalError):
    """A colour list is smaller than the size the algorithm's bound requires."""


class ExtensionFailedError(FrugalError):
    """Every colour of a list is forbidden at the vertex being extended."""


class OddDegreeError(FrugalError):
    """An Euler orientation was requested for a graph with an odd-degree vertex."""


class NotRegularError(FrugalError):
    """A regular graph was required."""


class NotBipartiteError(FrugalError):
    """A bipartite graph was required."""


class NotEvenRegularError(FrugalError):
    """A 2r-regular graph was required."""


class OddKError(FrugalError):
    """The even-frugality pipeline was called with odd k."""


class EvenKError(FrugalError):
    """The odd-frugality pipeline was called with even k."""


class InvalidColouringError(FrugalError):
    """A colouring supplied as input does not satisfy its required property."""


class ClassColouringBudgetExhaustedError(FrugalError):
    """A per-class rainbow colouring search could not finish within budget."""


class ParseError(FrugalError):
    """A graph file could not be parsed."""
