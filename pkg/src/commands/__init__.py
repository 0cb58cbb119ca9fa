"""
Commands package for the fwm-noise CLI.

This package contains individual command implementations with dependency injection.
"""
