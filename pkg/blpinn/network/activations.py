"""
Logistic sigmoid and its closed-form derivatives
"""
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import expit


def sigmoid(x: ArrayLike) -> np.ndarray:
    """
    Numerically stable logistic sigmoid 1/(1+e^{-x})

    Saturates to exactly 0.0 or 1.0 for large |x| without overflow.
    """
    return expit(np.asarray(x, dtype=float))


def sigmoid_jet(x: ArrayLike) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Sigmoid value with first and second derivatives

    All three come from a single evaluation s = sigmoid(x):
    s' = s(1-s), s'' = s(1-s)(1-2s).

    Args:
        x: Scalar or array of pre-activations

    Returns:
        Tuple (s, s', s'')
    """
    s = sigmoid(x)
    s1 = s * (1.0 - s)
    s2 = s1 * (1.0 - 2.0 * s)
    return s, s1, s2


def sigmoid_jet3(
    x: ArrayLike,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Sigmoid with derivatives up to third order, s''' = s(1-s)(1-6s+6s^2)"""
    s = sigmoid(x)
    s1 = s * (1.0 - s)
    s2 = s1 * (1.0 - 2.0 * s)
    s3 = s1 * (1.0 - 6.0 * s + 6.0 * s * s)
    return s, s1, s2, s3
