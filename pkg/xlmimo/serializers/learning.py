"""
Serializers for the fuzzy layer, learning hyperparameters, training and evaluation sizes.
"""

from typing import Any

from rest_framework import serializers

from xlmimo.serializers.base import StrictSerializer


class FuzzySerializer(StrictSerializer):
    """
    Serializer for the fuzzy-agent layer.

    Attributes:
        m (int): Number of fuzzy agents, at most K.
        d_a (int): Action dimensionality; power control uses 1.
    """

    m = serializers.IntegerField(min_value=1, default=2)
    d_a = serializers.IntegerField(min_value=1, max_value=1, default=1)


class HyperSerializer(StrictSerializer):
    """
    Serializer for actor-critic hyperparameters.
    """

    gamma = serializers.FloatField(min_value=0.0, max_value=0.999999, default=0.9)
    tau = serializers.FloatField(default=0.01)
    actor_lr = serializers.FloatField(default=1e-4)
    critic_lr = serializers.FloatField(default=1e-3)
    batch_size = serializers.IntegerField(min_value=1, default=64)
    buffer_capacity = serializers.IntegerField(min_value=1, default=10_000)
    noise_start = serializers.FloatField(min_value=0.0, default=0.2)
    noise_end = serializers.FloatField(min_value=0.0, default=0.01)
    actor_hidden = serializers.ListField(
        child=serializers.IntegerField(min_value=1), min_length=1, default=[64, 64]
    )
    critic_hidden = serializers.ListField(
        child=serializers.IntegerField(min_value=1), min_length=1, default=[128, 128]
    )
    reward_scale = serializers.FloatField(default=0.1)

    def validate_tau(self, value: float) -> float:
        if not 0.0 < value <= 1.0:
            raise serializers.ValidationError("tau must lie in (0, 1].")
        return value

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        for name in ("actor_lr", "critic_lr", "reward_scale"):
            if attrs[name] <= 0:
                raise serializers.ValidationError({name: ["Must be positive."]})
        if attrs["buffer_capacity"] < attrs["batch_size"]:
            raise serializers.ValidationError(
                {"buffer_capacity": ["Must hold at least one batch."]}
            )
        return attrs


class TrainingSerializer(StrictSerializer):
    """
    Serializer for training-loop sizes; unset values come from settings.
    """

    n_mc = serializers.IntegerField(min_value=1, allow_null=True, default=None)
    steps_per_episode = serializers.IntegerField(min_value=1, allow_null=True, default=None)


class EvaluationSerializer(StrictSerializer):
    """
    Serializer for the frozen-policy evaluation.

    Attributes:
        layouts (int | None): Number of fresh drops; 0 skips evaluation.
        n_mc (int | None): Realizations per drop.
        grid_levels (int): Levels per UE of the grid-search oracle; 0 skips it.
    """

    layouts = serializers.IntegerField(min_value=0, allow_null=True, default=None)
    n_mc = serializers.IntegerField(min_value=1, allow_null=True, default=None)
    grid_levels = serializers.IntegerField(min_value=0, default=0)

    def validate_grid_levels(self, value: int) -> int:
        if value == 1:
            raise serializers.ValidationError("grid_levels must be 0 or at least 2.")
        return value
