"""Depth, width, local depth, graded duality and Frobenius pushforwards."""
