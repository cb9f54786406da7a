"""
Finite-difference helpers shared by the test modules
"""
import numpy as np


def central_difference(func, x, h=1e-5):
    """Centered first difference of a vectorized function"""
    x = np.asarray(x, dtype=float)
    return (np.asarray(func(x + h)) - np.asarray(func(x - h))) / (2.0 * h)


def numeric_gradient(func, theta, h=1e-6):
    """Centered difference of a scalar function over every entry of theta"""
    theta = np.asarray(theta, dtype=float)
    grad = np.zeros_like(theta)
    for i in range(theta.size):
        step = np.zeros_like(theta)
        step[i] = h
        grad[i] = (func(theta + step) - func(theta - step)) / (2.0 * h)
    return grad


def relative_error(actual, expected):
    return float(np.linalg.norm(actual - expected) / max(np.linalg.norm(expected), 1e-300))
