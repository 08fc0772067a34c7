"""
Cell-free XL-MIMO uplink simulator with fuzzy multi-agent power control.
"""

__version__ = "0.1.0"
