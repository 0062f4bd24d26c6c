"""Data files shipped with mixedsurf."""
