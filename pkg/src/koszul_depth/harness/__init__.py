"""Instances, families, property suites and the command line."""
