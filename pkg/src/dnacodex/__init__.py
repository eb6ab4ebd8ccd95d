"""
dnacodex - cyclic DNA codes over the ring F2 + uF2
"""

__version__ = "0.1.0"
__author__ = "dnacodex Team"
