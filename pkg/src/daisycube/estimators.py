"""scikit-learn compatible wrappers.

Words are rows of a 0/1 matrix (column ``j`` is coordinate ``j + 1``), or any
other input :func:`daisycube.validation.check_words` accepts.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .bitword import Word
from .census import compute_census, cube_polynomial, distance_poly, weight_poly
from .family import DaisyCube, VertexSet, downward_closure
from .validation import check_word, check_words, words_to_array


class DaisyCubeClosure(BaseEstimator, TransformerMixin):
    """Learn the daisy cube generated by a set of words.

    ``fit`` reduces the words to their maximal antichain and closes them
    downward. ``transform`` maps each word to its distances from the
    subcubes ``I(0^n, x)`` of the maximal vertices ``x``, and ``predict``
    tells whether a word is a vertex of the daisy cube.

    Attributes
    ----------
    daisy_cube_ : DaisyCube
    maximal_ : ndarray of shape (n_maximal, n_features_in_)
    n_features_in_ : int
    """

    def fit(self, X, y=None):
        n, values = check_words(X)
        self.daisy_cube_ = downward_closure(VertexSet(n, values))
        self.n_features_in_ = n
        self.maximal_ = words_to_array(n, self.daisy_cube_.maximal.values)
        return self

    def transform(self, X):
        check_is_fitted(self, "daisy_cube_")
        _, values = check_words(X, self.n_features_in_)
        tops = np.array(self.daisy_cube_.maximal.values, dtype=np.uint64)
        words = np.array(values, dtype=np.uint64)
        return np.bitwise_count(words[:, None] & ~tops[None, :]).astype(np.int64)

    def predict(self, X):
        check_is_fitted(self, "daisy_cube_")
        _, values = check_words(X, self.n_features_in_)
        members = self.daisy_cube_.vertices.members
        return np.array([v in members for v in values], dtype=bool)

    @property
    def vertices_(self) -> np.ndarray:
        check_is_fitted(self, "daisy_cube_")
        return words_to_array(self.n_features_in_, self.daisy_cube_.vertices.values)


class DistanceCubeCensus(BaseEstimator, TransformerMixin):
    """Distance cube census of the subgraph of ``Q_n`` induced by the fitted words.

    ``transform`` turns anchor words into flattened count vectors: column
    ``k * (n + 1) + d`` holds the number of induced ``k``-cubes at distance
    ``d`` from the anchor. ``fit_transform`` therefore yields the census at
    every fitted vertex.

    Parameters
    ----------
    engine : {"auto", "oracle", "fast", "both"}
        Census engine; ``fast`` and ``both`` need a downward-closed vertex set.
    """

    def __init__(self, engine: str = "auto"):
        self.engine = engine

    def fit(self, X, y=None):
        n, values = check_words(X)
        V = VertexSet(n, values)
        self.is_daisy_ = V.is_downward_closed()
        self.graph_ = DaisyCube.from_vertex_set(V) if self.is_daisy_ else V
        self.n_features_in_ = n
        self.cube_poly_ = cube_polynomial(self.graph_)
        return self

    def census(self, anchor):
        check_is_fitted(self, "graph_")
        u = check_word(anchor, self.n_features_in_)
        return compute_census(self.graph_, u, self.engine)[0]

    def distance_poly(self, anchor):
        return distance_poly(self.census(anchor))

    def weight_poly(self, anchor):
        return weight_poly(self.census(anchor))

    def transform(self, X):
        check_is_fitted(self, "graph_")
        n, values = check_words(X, self.n_features_in_)
        out = np.zeros((len(values), (n + 1) ** 2), dtype=np.int64)
        for i, v in enumerate(values):
            for (k, d), c in self.census(Word(n, v)).counts.items():
                out[i, k * (n + 1) + d] = c
        return out

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X, y).transform(self.graph_)
