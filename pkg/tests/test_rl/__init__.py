"""Tests for the rl package."""
