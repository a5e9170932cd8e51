"""Finite matroid toolkit built around circuit families and graph frameworks.

Validate matroids from circuits, compute duals and minors, search for
signings and graph frameworks, realize frameworks as multigraphs, and build
bridge/partition-tree certificates for circuits of 3-connected instances.
"""

from .matroid import (
    Matroid,
    SeparationWitness,
    binary_tame_report,
    build_matroid,
    connectivity,
    dual_matroid,
    fundamental_set,
    is_connected,
    minor,
    switching_sequence,
)
from .cyclic import (
    CyclicOrder,
    LinearOrder,
    arc_components,
    clockwise_next,
    linear_order_path,
    restrict_cyclic,
    validate_cyclic,
)
from .graph import Multigraph, bonds, cycle_matroid, cycles
from .signing import (
    Signing,
    find_signing,
    signing_from_oriented_graph,
    verify_signing,
)
from .framework import (
    GraphFramework,
    derive_circuit_orders,
    find_framework,
    find_framework_detailed,
    framework_from_graph,
    restrict_framework,
    verify_framework,
)
from .realize import (
    VertexCode,
    base_path,
    edge_endpoint_codes,
    realize,
    subspace_connectivity,
    verify_induces,
)
from .bridges import (
    BridgeDecomposition,
    PartitionTree,
    bridge_decomposition,
    countability_certificate,
    partition_tree,
    separating_bridge,
)

__all__ = [name for name in dir() if not name.startswith("_")]
