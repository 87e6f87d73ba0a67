"""Tests for tamepres."""
