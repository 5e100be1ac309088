"""Chain complexes, chain maps, rule complexes and complex operations."""
