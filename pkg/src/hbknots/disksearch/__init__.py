"""Search for boundary-compressing disks for P in the tunnel complement."""
from .model import (DeltaComponent, DiskCandidate, EpsilonDescriptor, Point, SearchContext,
                    e_cyclic_order)
from .predicates import PredicateVerdict
from .search import CapsError, SearchCaps, SearchReport, search

__all__ = [
    "CapsError", "DeltaComponent", "DiskCandidate", "EpsilonDescriptor", "Point",
    "PredicateVerdict", "SearchCaps", "SearchContext", "SearchReport", "e_cyclic_order", "search",
]
