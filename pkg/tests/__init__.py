"""Tests for mixedsurf."""
