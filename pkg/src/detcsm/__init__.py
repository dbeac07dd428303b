"""Characteristic classes of generic determinantal varieties and homogeneous EIDV."""

__version__ = "0.1.0"
