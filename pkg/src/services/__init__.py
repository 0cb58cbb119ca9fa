"""
Services package for business logic.

This package contains the spectrum, sweep and detuning-optimisation services.
"""
