"""Tests for tamepres engines."""
