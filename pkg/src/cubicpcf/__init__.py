"""Polynomial continued fractions for real cubic irrationals."""
