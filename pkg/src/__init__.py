"""Source package for the four-wave mixing noise simulator."""
