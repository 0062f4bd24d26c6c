"""mixedsurf - classification of mixed quasi-etale quotient surfaces."""
from __future__ import annotations


__version__ = "0.1.0"
