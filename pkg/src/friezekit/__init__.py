"""Exact toolkit for periodic difference equations, frieze patterns and their dualities."""
