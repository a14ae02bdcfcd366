"""Connectivity functions, k-brittleness, vertex-minors and linear rank-width."""
