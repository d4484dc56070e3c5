# Core imports
import logging

# Library imports
import numpy as np
import scipy.linalg

# Package imports
from .Factor_Pair import Factor_Pair
from ..core.Errors import InsufficientDataError, NumericFailureError
from ..settings import Arguments

class Matrix_Factorization(object):
    """
    Regularized low-rank factorization of a partially observed matrix with
    alternating least squares, and imputation of its unobserved entries.

    The objective is the sum of squared residuals over the observed entries
    plus half the regularization coefficient times the squared Frobenius
    norms of both factors.
    """

    def __init__(self, arguments):
        if isinstance(arguments, Arguments):
            settings = arguments.get_settings("imputation")
        else:
            raise TypeError("'arguments' must be an instance of Arguments")

        self._logger = logging.getLogger(__name__)
        self._rank = settings.get("factor_rank")
        self._regularization = settings.get("factor_lambda")
        self._max_iterations = settings.get("factor_iterations")
        self._tolerance = settings.get("factor_tolerance")
        self._seed = settings.get("seed")

    def _check(self, values, mask):
        values = np.asarray(values, dtype=float)
        mask = np.asarray(mask, dtype=bool)
        if values.ndim != 2 or values.shape != mask.shape:
            raise ValueError("Values of shape {} do not match mask of shape {}".format(values.shape, mask.shape))
        if not np.all(np.isfinite(values[mask])):
            raise ValueError("Observed entries must be finite")

        # Unobserved entries never take part in the computations.
        return np.where(mask, values, 0.0), mask

    def _solve(self, factors, values, mask, regularization):
        """
        Solve the regularized least squares problem of every row of `values`
        against the fixed `factors`, a matrix with a column per column of
        `values`, using only the observed entries of each row.

        Returns the solutions as columns of an `r` by `m` matrix.
        """

        rank = factors.shape[0]
        if regularization > 0:
            # Each row has a positive definite system of size `r`.
            weighted = mask.astype(float)
            A = np.einsum('ij,aj,bj->iab', weighted, factors, factors)
            A += (regularization / 2.0) * np.eye(rank)
            b = np.dot(values * weighted, factors.T)
            return np.linalg.solve(A, b[:, :, np.newaxis])[:, :, 0].T

        solutions = np.zeros((rank, values.shape[0]))
        for i in range(values.shape[0]):
            observed = mask[i]
            if np.any(observed):
                solution = scipy.linalg.lstsq(factors[:, observed].T, values[i, observed])[0]
                solutions[:, i] = solution

        return solutions

    def _objective(self, values, mask, U, V, regularization):
        residual = (values - np.dot(U.T, V)) * mask
        penalty = (regularization / 2.0) * (np.sum(U ** 2) + np.sum(V ** 2))
        return float(np.sum(residual ** 2) + penalty)

    def factorize(self, values, mask, seed=None):
        """
        Factorize the matrix `values` of which the entries where `mask` is
        `True` are observed.

        Each sweep solves the feature factors `V` and then the sample factors
        `U` exactly. The first objective is that of the initial factors, with
        `U` drawn uniformly from [-0.1, 0.1] and `V` zero. Returns a
        `Factor_Pair` with the objective after every sweep. The `seed` of the
        initial draw defaults to the configured seed.
        """

        values, mask = self._check(values, mask)
        m, n = values.shape
        if not np.any(mask):
            raise InsufficientDataError("Cannot factorize a matrix without observed entries")
        if not 1 <= self._rank <= min(m, n):
            raise ValueError("Factor rank must be between 1 and {}, not {}".format(min(m, n), self._rank))

        empty_rows = np.flatnonzero(~np.any(mask, axis=1))
        empty_columns = np.flatnonzero(~np.any(mask, axis=0))
        if empty_rows.size > 0:
            self._logger.warning("%d rows have no observed entries and cannot be recovered", empty_rows.size)
        if empty_columns.size > 0:
            self._logger.warning("Columns %s have no observed entries and cannot be recovered", empty_columns.tolist())

        random_state = np.random.RandomState(self._seed if seed is None else seed)
        U = random_state.uniform(-0.1, 0.1, size=(self._rank, m))
        V = np.zeros((self._rank, n))

        trace = [self._objective(values, mask, U, V, self._regularization)]
        for iteration in range(1, self._max_iterations + 1):
            V = self._solve(U, values.T, mask.T, self._regularization)
            U = self._solve(V, values, mask, self._regularization)

            objective = self._objective(values, mask, U, V, self._regularization)
            if not np.isfinite(objective):
                raise NumericFailureError("Factorization objective is not finite after {} sweeps".format(iteration))

            previous = trace[-1]
            trace.append(objective)
            self._logger.debug("Factorization sweep %d: objective %.6f", iteration, objective)
            if abs(objective - previous) / max(previous, 1.0) < self._tolerance:
                break

        self._logger.info("Factorized %dx%d matrix with rank %d in %d sweeps, objective %.6f",
                          m, n, self._rank, len(trace) - 1, trace[-1])

        return Factor_Pair(U, V, self._regularization, trace)

    def objective(self, values, mask, factors):
        """
        Calculate the objective of the `factors` for the partially observed
        matrix `values` with its `mask`.
        """

        values, mask = self._check(values, mask)
        if factors.shape != values.shape:
            raise ValueError("Factors of a {} matrix do not match values of shape {}".format(factors.shape, values.shape))

        return self._objective(values, mask, factors.U, factors.V,
                               factors.regularization)

    def fold_in(self, values, mask, factors):
        """
        Determine sample factors for new rows `values` with their `mask`
        against the fixed feature factors of the trained `factors`.

        Returns a `Factor_Pair` for the new rows that shares the feature
        factors, so that the training factors are not influenced by the new
        rows.
        """

        values, mask = self._check(values, mask)
        if values.shape[1] != factors.V.shape[1]:
            raise ValueError("Rows with {} columns do not match factors of {} columns".format(values.shape[1], factors.V.shape[1]))

        empty_rows = np.flatnonzero(~np.any(mask, axis=1))
        if empty_rows.size > 0:
            self._logger.warning("%d new rows have no observed entries", empty_rows.size)

        U = self._solve(factors.V, values, mask, factors.regularization)
        return Factor_Pair(U, factors.V, factors.regularization)

    def impute(self, values, mask, factors, max_codes=None):
        """
        Fill the unobserved entries of `values` with the reconstruction of the
        `factors`. Observed entries are kept as they are.

        If `max_codes` is given, then imputed entries are rounded to the
        nearest integer code and clamped to the range from 0 to the maximum
        code of their column.
        """

        values = np.asarray(values, dtype=float)
        mask = np.asarray(mask, dtype=bool)
        if values.shape != mask.shape or factors.shape != values.shape:
            raise ValueError("Values of shape {} do not match mask of shape {} and factors of a {} matrix".format(values.shape, mask.shape, factors.shape))

        reconstruction = factors.reconstruct()
        if max_codes is not None:
            max_codes = np.asarray(max_codes, dtype=float)
            if max_codes.shape != (values.shape[1],):
                raise ValueError("Expected {} maximum codes, not {}".format(values.shape[1], max_codes.shape))

            reconstruction = np.clip(np.round(reconstruction), 0.0, max_codes)

        return np.where(mask, values, reconstruction)
