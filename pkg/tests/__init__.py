"""Tests for heisenberg."""
