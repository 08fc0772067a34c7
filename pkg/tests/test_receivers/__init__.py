"""Tests for the receivers package."""
