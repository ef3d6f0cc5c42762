"""Ontology-driven domain discovery for short social-media texts."""

__version__ = "0.1.0"
