"""Tests for the trainers package."""
