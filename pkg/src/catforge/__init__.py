"""catforge: finite categories as composition tables, checked exhaustively."""
from .category import (
    ArrowRecord,
    FinCategory,
    LawReport,
    Violation,
    are_isomorphic,
    build_category,
    compose,
    find_initial,
    find_terminal,
    hom_set,
    is_isomorphism,
    unique_iso_between_initials,
    validate_category,
)
from .errors import (
    CapExceeded,
    CatforgeError,
    CompositionError,
    CycleError,
    IncompleteTableError,
    InconsistencyError,
    MissingStructureError,
    PreconditionError,
    StructureError,
)

__version__ = "0.1.0"
