"""
Serializer for a whole experiment document.
"""

from typing import Any

from rest_framework import serializers

from xlmimo.constants import COMBINERS, FUZZY_METHODS, METHODS, REWARDS
from xlmimo.serializers.base import StrictSerializer
from xlmimo.serializers.learning import (
    EvaluationSerializer,
    FuzzySerializer,
    HyperSerializer,
    TrainingSerializer,
)
from xlmimo.serializers.network import NetworkSerializer

OPTIONAL_SECTIONS = ("fuzzy", "hyper", "training", "evaluation")


class ExperimentSerializer(StrictSerializer):
    """
    Serializer for an experiment configuration.

    Attributes:
        network (dict): Network section, see NetworkSerializer.
        method (str): One of the power-control methods.
        combiner (str): "mr" or "lmmse".
        episodes (int): Training episodes.
        seed (int): Master seed of every random stream.
        output_dir (str): Artifact directory, relative to XLMIMO_OUTPUT_ROOT unless absolute.
        reward (str): "sum_se" or "per_ue_se".
    """

    network = NetworkSerializer()
    fuzzy = FuzzySerializer(required=False)
    hyper = HyperSerializer(required=False)
    training = TrainingSerializer(required=False)
    evaluation = EvaluationSerializer(required=False)
    method = serializers.ChoiceField(choices=METHODS, default="fl_ctce")
    combiner = serializers.ChoiceField(choices=COMBINERS, default="lmmse")
    episodes = serializers.IntegerField(min_value=0, default=2000)
    seed = serializers.IntegerField(min_value=0)
    output_dir = serializers.CharField(allow_blank=True, default="")
    reward = serializers.ChoiceField(choices=REWARDS, default="sum_se")

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        """Fill absent sections with their defaults and check m against K."""
        for name in OPTIONAL_SECTIONS:
            if name not in attrs:
                section = self.fields[name].__class__(data={})
                section.is_valid(raise_exception=True)
                attrs[name] = dict(section.validated_data)
        if attrs["method"] in FUZZY_METHODS and attrs["fuzzy"]["m"] > attrs["network"]["num_ue"]:
            raise serializers.ValidationError(
                {"fuzzy": {"m": ["Must not exceed network.num_ue."]}}
            )
        if not attrs["output_dir"]:
            attrs["output_dir"] = (
                f"{attrs['method']}_{attrs['combiner']}_seed{attrs['seed']}"
            )
        return attrs
