"""
Wound Group Toolkit

Exact algebra over characteristic-p function fields.
"""
