"""
Serializer for the network section of an experiment.
"""

from typing import Any

from rest_framework import serializers

from xlmimo.channel import NetworkConfig
from xlmimo.constants import (
    DEFAULT_ANTENNA_SPACING,
    DEFAULT_AREA_SIDE_M,
    DEFAULT_HEIGHT_GAP_M,
    DEFAULT_NOISE_POWER_W,
    DEFAULT_WAVELENGTH,
    SHADOWING_STD_DB,
)
from xlmimo.serializers.base import StrictSerializer


class NetworkSerializer(StrictSerializer):
    """
    Serializer for the network geometry and power budget.

    Attributes:
        num_bs (int): Number of BSs, M.
        num_ue (int): Number of UEs, K.
        p_max (float): Per-UE power cap in watts.
        bs_grid (list[int] | None): Optional [rows, cols] BS grid.
    """

    num_bs = serializers.IntegerField(min_value=1)
    num_ue = serializers.IntegerField(min_value=1)
    p_max = serializers.FloatField()
    n_hr = serializers.IntegerField(min_value=1, default=4)
    n_vr = serializers.IntegerField(min_value=1, default=4)
    n_hs = serializers.IntegerField(min_value=1, default=2)
    n_vs = serializers.IntegerField(min_value=1, default=2)
    delta_r = serializers.FloatField(default=DEFAULT_ANTENNA_SPACING)
    delta_s = serializers.FloatField(default=DEFAULT_ANTENNA_SPACING)
    wavelength = serializers.FloatField(default=DEFAULT_WAVELENGTH)
    area_side = serializers.FloatField(default=DEFAULT_AREA_SIDE_M)
    bs_ue_height_gap = serializers.FloatField(min_value=0.0, default=DEFAULT_HEIGHT_GAP_M)
    noise_power = serializers.FloatField(default=DEFAULT_NOISE_POWER_W)
    shadowing_std_db = serializers.FloatField(min_value=0.0, default=SHADOWING_STD_DB)
    bs_grid = serializers.ListField(
        child=serializers.IntegerField(min_value=1),
        min_length=2,
        max_length=2,
        allow_null=True,
        default=None,
    )

    def validate_p_max(self, value: float) -> float:
        if value <= 0:
            raise serializers.ValidationError("p_max must be positive.")
        return value

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        """Check the cross-field constraints through NetworkConfig itself."""
        try:
            config = NetworkConfig(**attrs)
            config.grid_shape()
        except ValueError as error:
            raise serializers.ValidationError(str(error)) from error
        return attrs


def network_config(validated_data: dict[str, Any]) -> NetworkConfig:
    """Build the NetworkConfig of validated network data."""
    return NetworkConfig(**validated_data)
