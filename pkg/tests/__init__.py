"""Tests for blpinn"""
