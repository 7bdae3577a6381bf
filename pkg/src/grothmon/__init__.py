"""Grothendieck monoids, faces and localizations, with a type-A quiver layer."""

from .errors import (
    DecompositionFailed,
    GrothmonError,
    InvalidInput,
    NoExtension,
    NotContaining,
    NotInCategory,
    NotTorsionfree,
    UnsupportedMonoid,
    WindowNotClosed,
)
from .lattice import AbGroupPresentation, IntLattice, hnf, lattice_member, lattice_sum, quotient_presentation
from .monoid import CanonicalMonoid, FaceDesc, MonoidElem, SubmonoidGens, make, make_free
from .quiver import Interval, LinearAQuiver, ModuleObj, SerreSub, TorsionfreeClass
from .intermediate import DObj, IntermediateCat, class_of, from_torsionfree, monoid_of

__version__ = "0.1.0"

__all__ = [
    "AbGroupPresentation", "CanonicalMonoid", "DObj", "DecompositionFailed", "FaceDesc", "GrothmonError",
    "IntLattice", "IntermediateCat", "Interval", "InvalidInput", "LinearAQuiver", "ModuleObj", "MonoidElem",
    "NoExtension", "NotContaining", "NotInCategory", "NotTorsionfree", "SerreSub", "SubmonoidGens",
    "TorsionfreeClass", "UnsupportedMonoid", "WindowNotClosed", "class_of", "from_torsionfree", "hnf",
    "lattice_member", "lattice_sum", "make", "make_free", "monoid_of", "quotient_presentation",
]
