"""Exception hierarchy shared by every catforge module."""


class CatforgeError(Exception):
    pass


class StructureError(CatforgeError):
    """Malformed input: index out of range, non-total map, ill-typed data.

    Distinct from a law violation, which is reported rather than raised.
    """


class CompositionError(StructureError):
    def __init__(self, g, f, message=None):
        self.g = g
        self.f = f
        super().__init__(message or f"arrows {g} and {f} are not composable (cod f != dom g)")


class IncompleteTableError(StructureError):
    def __init__(self, missing, message=None):
        self.missing = list(missing)
        pairs = ", ".join(f"({g}, {f})" for g, f in self.missing[:10])
        more = "" if len(self.missing) <= 10 else f" and {len(self.missing) - 10} more"
        super().__init__(message or f"composition table is missing {pairs}{more}")


class MissingStructureError(StructureError):
    """A required product, exponential or terminal object does not exist."""


class PreconditionError(CatforgeError):
    pass


class InconsistencyError(CatforgeError):
    """Raised when an input that was supposed to be verified turns out not to be."""


class CycleError(CatforgeError):
    pass


class CapExceeded(CatforgeError):
    def __init__(self, what, value, cap):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what} ({value}) exceeds the size cap {cap}; raise it with --cap or CATFORGE_CAP")
