"""Init file for tests."""
