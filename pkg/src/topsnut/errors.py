"""Exception hierarchy shared by all topsnut modules."""


class TopsnutError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(TopsnutError):
    """Malformed input data (bad graph, bad file, bad labels)."""


class CapacityError(TopsnutError):
    """Input exceeds a configured exact-computation cap."""


class PreconditionError(TopsnutError):
    """An operation's documented precondition does not hold."""


class UndefinedLabelError(PreconditionError):
    """A required vertex or edge label is missing."""


class NotBipartiteError(PreconditionError):
    """Set-ordered check requested on a non-bipartite graph."""


class EmbeddingError(TopsnutError):
    """A rotation system does not describe a planar (genus-0) embedding."""


class GluingError(PreconditionError):
    """Parts cannot be identified consistently (colors or darts clash)."""


class NotSubdivisibleError(PreconditionError):
    """The requested cut does not separate the graph into valid parts."""


class FlipParallelError(PreconditionError):
    """Flip target diagonal already present as an edge."""


class DegenerateFlipError(PreconditionError):
    """The two triangles of the edge share their third vertex."""


class RuleError(TopsnutError):
    """Unknown or inapplicable authentication rule tag."""


class StepError(TopsnutError):
    """Chain step transform is not applicable to the given element."""


class DegenerateParamsError(TopsnutError):
    """Space parameters make every product term vanish."""


class LookupRangeError(TopsnutError):
    """Requested row is outside the embedded reference tables."""


class StoreError(TopsnutError):
    """Persistent record log is unreadable or corrupt."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class SessionError(TopsnutError):
    """Unknown, inactive or finished authentication session."""


class ConflictError(TopsnutError):
    """Registration conflict (user id already taken)."""


class NotFoundError(TopsnutError):
    """Unknown user id."""
