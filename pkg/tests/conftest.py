"""
Shared fixtures
"""
import numpy as np
import pytest

from blpinn.network import NetParams, init_params


@pytest.fixture
def params():
    """Small seeded network"""
    return init_params(n1=12, seed=7)


@pytest.fixture
def zero_net():
    """Network with û ≡ 0"""
    return NetParams(w1=[1.0], b1=[0.0], w2=[0.0])


@pytest.fixture
def unit_net():
    """Network with û ≡ 1: σ(0)·2"""
    return NetParams(w1=[0.0], b1=[0.0], w2=[2.0])


@pytest.fixture
def interior_points():
    return np.linspace(0.05, 0.95, 19)
