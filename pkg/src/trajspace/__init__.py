"""Exact analyzer for traversing line flows on compact planar domains.

Computes the stratified trajectory space of a scene (an implicit-curve
region with a constant or radial field), the induced stratifications of the
region and its double, their chain complexes and homology, flow-complexity
vectors, and the simplicial-volume lower-bound checks; plus the universal
combinatorics of boundary-tangency patterns in any dimension.
"""

__version__ = "0.1.0"
