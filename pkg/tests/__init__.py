"""Test suite for siclie."""
