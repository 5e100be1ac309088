"""Presented modules, homology, extended integers and the linear-algebra oracle."""
