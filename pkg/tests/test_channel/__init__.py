"""Tests for the channel package."""
