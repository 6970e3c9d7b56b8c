"""Node similarity from ego-network degree signatures and relative entropy."""

__version__ = "0.1.0"

from .errors import (
    EgoSimError,
    EmptyGraphError,
    MissingDatasetError,
    NodeNotFoundError,
    ParseError,
    UndefinedSignatureError,
    UnknownDatasetError,
)
from .graph import Graph, LocalNetwork, load_csv, load_edge_list, read_graph, to_edge_list
from .signature import DegreeSignature, all_signatures, render_signature, signature
from .similarity import (
    NodeRanking,
    SimilarityMatrix,
    kl_divergence,
    matrix_from_signatures,
    similarity,
    similarity_matrix,
    similarity_sums,
    symmetric_divergence,
    top_k_similar,
)
from .datasets import DatasetDescriptor, SignatureSet, list_datasets, load_dataset
from .kernels import DEFAULT_BACKEND as BACKEND
