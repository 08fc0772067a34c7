"""
Validation of experiment documents.
"""

from xlmimo.serializers.experiment import ExperimentSerializer
from xlmimo.serializers.learning import (
    EvaluationSerializer,
    FuzzySerializer,
    HyperSerializer,
    TrainingSerializer,
)
from xlmimo.serializers.network import NetworkSerializer, network_config

__all__ = [
    "EvaluationSerializer",
    "ExperimentSerializer",
    "FuzzySerializer",
    "HyperSerializer",
    "NetworkSerializer",
    "TrainingSerializer",
    "network_config",
]
