"""Exception hierarchy shared by all grothmon modules."""


class GrothmonError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class InvalidInput(GrothmonError, ValueError):
    pass


class UnsupportedMonoid(GrothmonError):
    """The monoid leaves the coordinate class (units lattice + free part)."""


class NoExtension(GrothmonError):
    pass


class NotTorsionfree(GrothmonError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInCategory(GrothmonError):
    pass


class NotContaining(GrothmonError):
    pass


class DecompositionFailed(GrothmonError):
    """Rank data of a representation is inconsistent; indicates a bug."""


class WindowNotClosed(GrothmonError):
    pass
