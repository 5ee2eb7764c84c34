"""Cubic graph catalog for closed Wigner 3jm products.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from yutsis._core import (
    CubicGraph,
    YutsisError,
    adjacency_eigenvalues,
    all_pairs_distances,
    are_isomorphic,
    build_graph,
    canonical_edges,
    canonical_lcf,
    catalog_text,
    classify,
    cyclic_edge_connectivity,
    diameter,
    edge_connectivity,
    encode_cycle,
    enumerate_cubic,
    estrada,
    export_dot,
    export_molfile,
    export_smiles,
    girth,
    hamiltonian_cycles,
    identify_wigner,
    invariant_key,
    is_hamiltonian,
    lcf_contract,
    lcf_decode,
    lcf_equivalent,
    lcf_expand,
    parse_wigner_graph,
    wiener,
)

__all__ = [
    "CubicGraph",
    "YutsisError",
    "adjacency_eigenvalues",
    "all_pairs_distances",
    "are_isomorphic",
    "build_graph",
    "canonical_edges",
    "canonical_lcf",
    "catalog_text",
    "classify",
    "cyclic_edge_connectivity",
    "diameter",
    "edge_connectivity",
    "encode_cycle",
    "enumerate_cubic",
    "estrada",
    "export_dot",
    "export_molfile",
    "export_smiles",
    "girth",
    "hamiltonian_cycles",
    "identify_wigner",
    "invariant_key",
    "is_hamiltonian",
    "lcf_contract",
    "lcf_decode",
    "lcf_equivalent",
    "lcf_expand",
    "parse_wigner_graph",
    "wiener",
]
