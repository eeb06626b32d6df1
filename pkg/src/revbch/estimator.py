"""Scikit-learn compatible encoder so the codes compose with pipelines.

Messages are rows of k symbols in {0, ..., q-1} (prime q); transform maps
them to length-n codewords, inverse_transform recovers the messages by
polynomial division.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError
from sklearn.utils import check_array

from .bch import build_code, generator_matrix
from .qpoly import Poly


class BchEncoder(BaseEstimator, TransformerMixin):
    """Non-systematic encoder for a reversible BCH code.

    Parameters mirror the code family: alphabet size q (prime), extension
    degree m, designed distance delta, and the generator variant.
    """

    def __init__(self, q=2, m=4, delta=3, variant="overline", modulus=None):
        self.q = q
        self.m = m
        self.delta = delta
        self.variant = variant
        self.modulus = modulus

    def fit(self, X=None, y=None):
        code = build_code(self.q, self.m, self.delta, self.variant,
                          modulus=self.modulus)
        self.code_ = code
        self.n_ = code.n
        self.k_ = code.k
        self.generator_ = generator_matrix(code)
        return self

    def _check_fitted(self):
        if not hasattr(self, "code_"):
            raise NotFittedError("BchEncoder is not fitted; call fit() first")

    def transform(self, X):
        self._check_fitted()
        X = check_array(X, dtype=np.int64)
        if X.shape[1] != self.k_:
            raise ValueError(f"expected {self.k_} message symbols, got {X.shape[1]}")
        if X.min() < 0 or X.max() >= self.q:
            raise ValueError(f"message symbols must lie in [0, {self.q})")
        return (X @ self.generator_) % self.q

    def inverse_transform(self, X):
        self._check_fitted()
        X = check_array(X, dtype=np.int64)
        if X.shape[1] != self.n_:
            raise ValueError(f"expected {self.n_} codeword symbols, got {X.shape[1]}")
        field = self.code_.field
        out = np.zeros((X.shape[0], self.k_), dtype=np.int64)
        for row in range(X.shape[0]):
            c = Poly(field, (int(v) % self.q for v in X[row]))
            msg, rem = divmod(c, self.code_.generator)
            if not rem.is_zero():
                raise ValueError(f"row {row} is not a codeword")
            for i, v in enumerate(msg.coeffs):
                out[row, i] = v
        return out

    def get_feature_names_out(self, input_features=None):
        self._check_fitted()
        return np.array([f"c{i}" for i in range(self.n_)])
