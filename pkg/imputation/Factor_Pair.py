# Core imports
import csv

# Library imports
import numpy as np

# Package imports
from ..numerics.Matrix import Matrix

class Factor_Pair(object):
    """
    Low-rank factors of a feature matrix.

    The matrix `U` of shape `r` by `m` holds a column per sample and the
    matrix `V` of shape `r` by `n` holds a column per feature, such that the
    reconstruction of entry `(i, j)` is the dot product of column `i` of `U`
    and column `j` of `V`.
    """

    def __init__(self, U, V, regularization, objective_trace=None):
        self._U = np.array(U, dtype=float)
        self._V = np.array(V, dtype=float)
        if self._U.ndim != 2 or self._V.ndim != 2 or self._U.shape[0] != self._V.shape[0]:
            raise ValueError("Factors of shapes {} and {} do not share a rank".format(self._U.shape, self._V.shape))

        self._U.setflags(write=False)
        self._V.setflags(write=False)
        self._regularization = float(regularization)
        self._objective_trace = list(objective_trace) if objective_trace is not None else []

    @property
    def U(self):
        return self._U

    @property
    def V(self):
        return self._V

    @property
    def rank(self):
        return self._U.shape[0]

    @property
    def shape(self):
        """
        Retrieve the shape `(m, n)` of the matrix that the factors approximate.
        """

        return (self._U.shape[1], self._V.shape[1])

    @property
    def regularization(self):
        return self._regularization

    @property
    def objective_trace(self):
        return list(self._objective_trace)

    def reconstruct(self):
        """
        Retrieve the full real-valued low-rank approximation of the matrix.
        """

        return np.dot(self._U.T, self._V)

    def write_trace(self, file_name):
        """
        Write the objective trace to a CSV file with one row per sweep.
        """

        with open(file_name, "w", newline="") as trace_file:
            writer = csv.writer(trace_file)
            writer.writerow(["iteration", "objective"])
            for iteration, objective in enumerate(self._objective_trace):
                writer.writerow([iteration, repr(float(objective))])

    def to_dict(self):
        return {
            "U": Matrix.to_dict(self._U),
            "V": Matrix.to_dict(self._V),
            "rank": self.rank,
            "lambda": self._regularization,
            "objective_trace": [float(objective) for objective in self._objective_trace]
        }

    @classmethod
    def from_dict(cls, data):
        return cls(Matrix.from_dict(data["U"]), Matrix.from_dict(data["V"]),
                   data["lambda"], data.get("objective_trace"))
