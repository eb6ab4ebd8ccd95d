"""Codes over R = F2 + uF2, their reports and the DNA families."""
