"""Decide whether a graph has an induced uv-path longer than d(u,v), with certificates."""
