"""
blpinn Setup Configuration

All package metadata lives in pyproject.toml; this shim is kept for tools
that still invoke setup.py directly.
"""
from setuptools import setup

setup()
