"""
Helpers shared by test modules.

Reference computations and type aliases used across the ``tests/test_*``
packages live here, outside the tests themselves.
"""
