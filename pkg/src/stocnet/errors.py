"""Exception hierarchy shared by every stocnet module."""


class StocnetError(Exception):
    """Base class for all errors raised by stocnet."""


class GraphError(StocnetError, ValueError):
    """Invalid graph input."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class IdOutOfRange(GraphError, IndexError):
    pass


class ParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GeneratorError(StocnetError, ValueError):
    """Invalid generator parameters."""


class TooSmall(GeneratorError):
    pass


class BadDegree(GeneratorError):
    pass


class BadProbability(GeneratorError):
    pass


class BadParameter(GeneratorError):
    pass


class MismatchedInputs(StocnetError, ValueError):
    """A decomposition or census was paired with a graph it was not built from."""


class BadGeneration(StocnetError, ValueError):
    pass


class NotRegular(StocnetError, ValueError):
    pass


class EmptySample(StocnetError, ValueError):
    pass


class ConfigError(StocnetError, ValueError):
    pass


class GenerationFailure(StocnetError, RuntimeError):
    """Repeated rejection of generated graphs (e.g. never connected)."""
