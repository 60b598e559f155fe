"""Init file for unit tests."""
