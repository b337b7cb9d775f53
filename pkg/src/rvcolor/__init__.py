"""Rainbow vertex-connected colorings of graphs with given minimum degree."""
from .bounds import Regime, c_delta, lll_margin, theorem_bound
from .colorizer import ColoringReport, VertexColoring, auto_color, color_high_regime, color_split_regime, run_strategy
from .dominator import DominatorReport, build_strong_dominator
from .errors import (
    CertificateError,
    ContractError,
    DisconnectedGraphError,
    InvalidArgumentError,
    ResampleCapExceeded,
    RVCError,
    StrategyInapplicable,
)
from .generators import caro_chain, random_min_degree
from .graph import Graph, LayerDecomposition, diameter, distance_layers
from .sparsify import SparsifyReport, sparsify
from .verify import VerificationResult, exact_rvc, is_rvc, structural_verify

__all__ = [
    "CertificateError",
    "ColoringReport",
    "ContractError",
    "DisconnectedGraphError",
    "DominatorReport",
    "Graph",
    "InvalidArgumentError",
    "LayerDecomposition",
    "RVCError",
    "Regime",
    "ResampleCapExceeded",
    "SparsifyReport",
    "StrategyInapplicable",
    "VerificationResult",
    "VertexColoring",
    "auto_color",
    "build_strong_dominator",
    "c_delta",
    "caro_chain",
    "color_high_regime",
    "color_split_regime",
    "diameter",
    "distance_layers",
    "exact_rvc",
    "is_rvc",
    "lll_margin",
    "random_min_degree",
    "run_strategy",
    "sparsify",
    "structural_verify",
    "theorem_bound",
]
