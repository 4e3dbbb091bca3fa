class DiscTilerError(Exception):
    """Base class for all errors raised by disc_tiler."""


class GeometryError(DiscTilerError, ValueError):
    """Invalid or degenerate geometric input."""


class CatalogError(DiscTilerError):
    """A catalog construction failed or was asked for something unknown."""


class PreconditionError(DiscTilerError, ValueError):
    """An operation was called on inputs violating its stated precondition."""


class DocumentError(DiscTilerError, ValueError):
    """A tiling or multicurve document could not be parsed."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if path:
            where.append(f"at {path}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
