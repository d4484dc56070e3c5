# Library imports
import numpy as np

# Package imports
from ..core.Errors import InsufficientDataError

class PCA_Model(object):
    """
    Principal component analysis model of dense data.

    The model consists of the mean of the data, the principal axes as rows of
    a `k` by `d` matrix and the variance that each axis explains.
    """

    def __init__(self, mean, components, explained_variance):
        self._mean = np.array(mean, dtype=float)
        self._components = np.array(components, dtype=float)
        self._explained_variance = np.array(explained_variance, dtype=float)

        if self._components.ndim != 2 or self._components.shape[1] != self._mean.shape[0]:
            raise ValueError("Components of shape {} do not match a mean of dimension {}".format(self._components.shape, self._mean.shape[0]))

        if self._explained_variance.shape != (self._components.shape[0],):
            raise ValueError("Expected {} explained variances, not {}".format(self._components.shape[0], self._explained_variance.shape))

        # Fitted models are shared between encoders, so they must stay fixed.
        for array in (self._mean, self._components, self._explained_variance):
            array.setflags(write=False)

    @classmethod
    def fit(cls, data, k):
        """
        Fit a model with `k` components to the `m` by `d` matrix `data`.

        The components are the eigenvectors of the sample covariance matrix
        with the largest eigenvalues. Each component is oriented such that its
        first nonzero coordinate is positive. For zero-variance data, the
        components are an arbitrary orthonormal basis and the explained
        variance is zero.
        """

        data = np.asarray(data, dtype=float)
        if data.ndim != 2:
            raise ValueError("Data must be a matrix, not of shape {}".format(data.shape))

        m, d = data.shape
        if m < 2:
            raise InsufficientDataError("At least 2 rows are required to fit principal components, not {}".format(m))
        if not np.all(np.isfinite(data)):
            raise ValueError("Data for principal components must be finite")
        if not 1 <= k <= min(m - 1, d):
            raise ValueError("Number of components must be between 1 and {}, not {}".format(min(m - 1, d), k))

        mean = data.mean(axis=0)
        covariance = np.atleast_2d(np.cov(data - mean, rowvar=False, ddof=1))

        # Symmetric eigendecomposition returns eigenvalues in ascending order.
        eigenvalues, eigenvectors = np.linalg.eigh(covariance)
        order = np.argsort(-eigenvalues, kind="stable")[:k]
        variance = np.clip(eigenvalues[order], 0.0, None)
        components = eigenvectors[:, order].T.copy()

        for row in components:
            nonzero = np.flatnonzero(np.abs(row) > 1e-12)
            if nonzero.size > 0 and row[nonzero[0]] < 0:
                row *= -1

        return cls(mean, components, variance)

    @property
    def mean(self):
        return self._mean

    @property
    def components(self):
        return self._components

    @property
    def explained_variance(self):
        return self._explained_variance

    @property
    def dimension(self):
        """
        Retrieve the dimension `d` of the data that the model projects.
        """

        return self._mean.shape[0]

    @property
    def k(self):
        return self._components.shape[0]

    def _check_dimension(self, data):
        if data.shape[-1] != self.dimension:
            raise ValueError("Data of dimension {} does not match the model dimension {}".format(data.shape[-1], self.dimension))

    def transform(self, data):
        """
        Project `data` onto the principal components.

        The `data` is either a single `d`-vector or an `m` by `d` matrix, and
        the result has the same number of dimensions with `k` columns.
        """

        data = np.asarray(data, dtype=float)
        self._check_dimension(data)
        return np.dot(data - self._mean, self._components.T)

    def inverse_transform(self, projected):
        """
        Map `projected` coordinates back to the original data space.
        """

        projected = np.asarray(projected, dtype=float)
        if projected.shape[-1] != self.k:
            raise ValueError("Projected data of dimension {} does not match {} components".format(projected.shape[-1], self.k))

        return np.dot(projected, self._components) + self._mean

    def to_dict(self):
        return {
            "mean": self._mean.tolist(),
            "components": self._components.tolist(),
            "explained_variance": self._explained_variance.tolist()
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["mean"], data["components"], data["explained_variance"])
