"""
Burning numbers of circulant graphs.
"""

__version__ = "0.1.0"
