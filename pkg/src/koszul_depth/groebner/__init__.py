"""Groebner bases for submodules of free modules, syzygies and ideal arithmetic."""
