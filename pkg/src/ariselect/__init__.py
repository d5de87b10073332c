"""Feature selection for categorical data.

Scores features by mining pairs of rows at Hamming distance one: the share
of such pairs that flip the label measures how relevant a feature is, a
value of exactly 2 flags features whose isolated variation never occurs
(redundancy), and zero-variance features score 0.  Chi-square, mutual
information, and ReliefF scorers, synthetic dataset generators, a repeated-
subsampling experiment protocol, a cross-validated downstream evaluator,
and a CLI round out the toolkit.
"""

__version__ = "0.1.0"

from .ari import (
    REDUNDANT_SENTINEL,
    AriScore,
    DistanceOnePairs,
    PairSets,
    Relevance,
    ScoreKind,
    ari_all,
    ari_score,
    classify_relevance,
    distance_one_pairs,
    pair_sets,
)
from .baselines import (
    DEFAULT_RELIEF_NEIGHBORS,
    MethodId,
    chi2_scores,
    mi_scores,
    relief_scores,
)
from .dataset import (
    CategoricalDataset,
    FeatureId,
    load_csv,
    observed_values,
    subsample,
    write_csv,
)
from .errors import (
    AriSelectError,
    DimensionTooSmallError,
    EmptyFileError,
    EmptySelectionError,
    EnumerationTooLargeError,
    LengthMismatchError,
    MissingValueError,
    NoScorableFeatureError,
    RaggedRowError,
    RangeUnsupportedError,
    SizeOutOfRangeError,
)
from .evaluation import (
    EvalConfig,
    LogisticRegressionConfig,
    cv_accuracy,
    fit_softmax,
    loss_gradient,
    loss_value,
    one_hot_encode,
    predict_labels,
    top_k_features,
)
from .protocol import (
    FLAG_REDUNDANT,
    FLAG_ZERO_VARIANCE,
    FeatureScore,
    ProtocolConfig,
    ScoreReport,
    dimensionality_sweep,
    run_protocol,
)
from .synthetic import (
    ENUMERATION_CAP_DEFAULT,
    FUNCTION_IDS,
    SyntheticSpec,
    generate,
    label,
)

__all__ = [
    "__version__",
    "REDUNDANT_SENTINEL",
    "AriScore",
    "DistanceOnePairs",
    "PairSets",
    "Relevance",
    "ScoreKind",
    "ari_all",
    "ari_score",
    "classify_relevance",
    "distance_one_pairs",
    "pair_sets",
    "DEFAULT_RELIEF_NEIGHBORS",
    "MethodId",
    "chi2_scores",
    "mi_scores",
    "relief_scores",
    "CategoricalDataset",
    "FeatureId",
    "load_csv",
    "observed_values",
    "subsample",
    "write_csv",
    "AriSelectError",
    "DimensionTooSmallError",
    "EmptyFileError",
    "EmptySelectionError",
    "EnumerationTooLargeError",
    "LengthMismatchError",
    "MissingValueError",
    "NoScorableFeatureError",
    "RaggedRowError",
    "RangeUnsupportedError",
    "SizeOutOfRangeError",
    "EvalConfig",
    "LogisticRegressionConfig",
    "cv_accuracy",
    "fit_softmax",
    "loss_gradient",
    "loss_value",
    "one_hot_encode",
    "predict_labels",
    "top_k_features",
    "FLAG_REDUNDANT",
    "FLAG_ZERO_VARIANCE",
    "FeatureScore",
    "ProtocolConfig",
    "ScoreReport",
    "dimensionality_sweep",
    "run_protocol",
    "ENUMERATION_CAP_DEFAULT",
    "FUNCTION_IDS",
    "SyntheticSpec",
    "generate",
    "label",
]
