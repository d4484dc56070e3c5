# Library imports
import numpy as np

class Analytic_Hierarchy(object):
    """
    Weight derivation from a reciprocal pairwise comparison matrix.

    The weights are the normalized principal eigenvector of the matrix, found
    with power iteration, and the consistency of the judgments is reported
    with the consistency ratio against the random consistency index.
    """

    # Random consistency index for matrices of size 1 up to 15.
    RANDOM_INDEX = [
        0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49,
        1.51, 1.48, 1.56, 1.57, 1.59
    ]

    # Consistency ratio below which the judgments are acceptable.
    CONSISTENCY_THRESHOLD = 0.1

    def __init__(self, max_iterations=1000, tolerance=1e-12):
        self._max_iterations = max_iterations
        self._tolerance = tolerance

    def check(self, matrix):
        """
        Check that `matrix` is a square reciprocal matrix with positive entries
        of a size that has a random consistency index.

        Returns the matrix as a numpy array.
        """

        matrix = np.asarray(matrix, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("Comparison matrix must be square, not of shape {}".format(matrix.shape))

        n = matrix.shape[0]
        if not 2 <= n <= len(self.RANDOM_INDEX):
            raise ValueError("Comparison matrix size must be between 2 and {}, not {}".format(len(self.RANDOM_INDEX), n))
        if not np.all(np.isfinite(matrix)) or np.any(matrix <= 0):
            raise ValueError("Comparison matrix entries must be positive and finite")
        if not np.allclose(np.diag(matrix), 1.0, rtol=0.0, atol=1e-9):
            raise ValueError("Comparison matrix diagonal must be 1, not {}".format(np.diag(matrix).tolist()))

        product = matrix * matrix.T
        if not np.allclose(product, 1.0, rtol=0.0, atol=1e-9):
            i, j = np.unravel_index(np.argmax(np.abs(product - 1.0)), product.shape)
            raise ValueError("Comparison matrix is not reciprocal at ({}, {}): {} * {} != 1".format(i, j, matrix[i, j], matrix[j, i]))

        return matrix

    def weights(self, matrix):
        """
        Derive the weights from the comparison `matrix`.

        Returns the weight vector, which sums to 1, and the consistency ratio.
        A consistency ratio at or above `CONSISTENCY_THRESHOLD` indicates
        inconsistent judgments, but it is only reported.
        """

        matrix = self.check(matrix)
        n = matrix.shape[0]

        weights = np.full(n, 1.0 / n)
        for _ in range(self._max_iterations):
            product = np.dot(matrix, weights)
            new_weights = product / product.sum()
            converged = np.max(np.abs(new_weights - weights)) < self._tolerance
            weights = new_weights
            if converged:
                break

        # Since the weights sum to 1, the principal eigenvalue is the sum of
        # the matrix-weight product.
        eigenvalue = np.dot(matrix, weights).sum()
        random_index = self.RANDOM_INDEX[n - 1]
        if random_index == 0.0:
            ratio = 0.0
        else:
            ratio = max(0.0, (eigenvalue - n) / ((n - 1) * random_index))

        return weights, ratio

    @staticmethod
    def consistent_matrix(weights):
        """
        Build the perfectly consistent comparison matrix with entries
        `weights[i] / weights[j]`.
        """

        weights = np.asarray(weights, dtype=float)
        if weights.ndim != 1 or np.any(weights <= 0):
            raise ValueError("Weights must be a vector of positive values")

        return weights[:, np.newaxis] / weights[np.newaxis, :]
