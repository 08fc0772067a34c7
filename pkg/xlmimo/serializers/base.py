"""
Base serializer for experiment documents.
"""

from typing import Any

from rest_framework import serializers


class StrictSerializer(serializers.Serializer[dict[str, Any]]):
    """
    Serializer that rejects keys it does not declare.

    Applies at every nesting level, since nested serializers go through
    ``to_internal_value`` as well.
    """

    def to_internal_value(self, data: Any) -> dict[str, Any]:
        if isinstance(data, dict):
            unknown = sorted(set(data) - set(self.fields))
            if unknown:
                raise serializers.ValidationError(
                    {key: ["Unknown field."] for key in unknown}
                )
        return super().to_internal_value(data)

    def create(self, validated_data: dict[str, Any]) -> Any:
        """Experiment documents are validated only, never persisted."""
        raise NotImplementedError

    def update(self, instance: Any, validated_data: dict[str, Any]) -> Any:
        raise NotImplementedError
