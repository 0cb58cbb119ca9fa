"""Utility modules for command handling."""
