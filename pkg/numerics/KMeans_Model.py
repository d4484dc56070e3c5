# Library imports
import numpy as np

class KMeans_Model(object):
    """
    K-means clustering model with a fixed set of centroids.
    """

    def __init__(self, centroids, inertia=0.0, iterations_run=0,
                 inertia_trace=None):
        self._centroids = np.array(centroids, dtype=float)
        if self._centroids.ndim != 2:
            raise ValueError("Centroids must be a matrix, not of shape {}".format(self._centroids.shape))

        self._centroids.setflags(write=False)
        self._inertia = float(inertia)
        self._iterations_run = int(iterations_run)
        self._inertia_trace = list(inertia_trace) if inertia_trace is not None else []

    @staticmethod
    def _squared_distances(data, centroids):
        difference = data[:, np.newaxis, :] - centroids[np.newaxis, :, :]
        return np.sum(difference ** 2, axis=2)

    @classmethod
    def _seed_centroids(cls, data, k, random_state):
        """
        Select `k` initial centroids from the rows of `data` with the k-means++
        rule: each next centroid is drawn with probability proportional to the
        squared distance to the nearest centroid chosen so far.
        """

        m = data.shape[0]
        indices = [random_state.randint(m)]
        closest = np.sum((data - data[indices[0]]) ** 2, axis=1)
        for _ in range(1, k):
            total = closest.sum()
            if total > 0:
                index = random_state.choice(m, p=closest / total)
            else:
                # All points coincide with a chosen centroid.
                index = random_state.randint(m)

            indices.append(index)
            closest = np.minimum(closest, np.sum((data - data[index]) ** 2, axis=1))

        return data[indices].copy()

    @classmethod
    def _lloyd(cls, data, centroids, max_iterations):
        """
        Run Lloyd's algorithm from the given initial `centroids` until the
        assignments are stable or `max_iterations` is reached.

        Returns the centroids, the number of iterations and the trace of the
        inertia of each assignment step.
        """

        assignments = None
        trace = []
        iterations = 0
        for iterations in range(1, max_iterations + 1):
            distances = cls._squared_distances(data, centroids)
            new_assignments = np.argmin(distances, axis=1)
            trace.append(float(distances[np.arange(data.shape[0]), new_assignments].sum()))
            if assignments is not None and np.array_equal(assignments, new_assignments):
                break

            assignments = new_assignments
            nearest = distances[np.arange(data.shape[0]), assignments]
            taken = set()
            for cluster in range(centroids.shape[0]):
                members = assignments == cluster
                if np.any(members):
                    centroids[cluster] = data[members].mean(axis=0)
                    continue

                # Re-seed an empty cluster to the point that is farthest from
                # its centroid and not already used for another empty cluster.
                for index in np.argsort(-nearest, kind="stable"):
                    if index not in taken:
                        taken.add(index)
                        centroids[cluster] = data[index]
                        break

        return centroids, iterations, trace

    @classmethod
    def fit(cls, data, k, seed, max_iterations, restarts=1):
        """
        Cluster the rows of the `m` by `d` matrix `data` into `k` clusters.

        Lloyd's algorithm is started from `restarts` k-means++ seedings, all
        derived from `seed`, and the result with the lowest inertia is kept.
        The lowest restart wins ties, so the result is deterministic.
        """

        data = np.asarray(data, dtype=float)
        if data.ndim != 2:
            raise ValueError("Data must be a matrix, not of shape {}".format(data.shape))
        if not np.all(np.isfinite(data)):
            raise ValueError("Data for clustering must be finite")
        if not 1 <= k <= data.shape[0]:
            raise ValueError("Number of clusters must be between 1 and {}, not {}".format(data.shape[0], k))
        if max_iterations < 1:
            raise ValueError("Maximum number of iterations must be positive, not {}".format(max_iterations))
        if restarts < 1:
            raise ValueError("Number of restarts must be positive, not {}".format(restarts))

        random_state = np.random.RandomState(seed)
        best = None
        for _ in range(restarts):
            initial = cls._seed_centroids(data, k, random_state)
            centroids, iterations, trace = cls._lloyd(data, initial, max_iterations)

            distances = cls._squared_distances(data, centroids)
            inertia = float(distances.min(axis=1).sum())
            if best is None or inertia < best._inertia:
                best = cls(centroids, inertia, iterations, trace)

        return best

    @property
    def centroids(self):
        return self._centroids

    @property
    def k(self):
        return self._centroids.shape[0]

    @property
    def inertia(self):
        """
        Retrieve the sum of squared distances of the training points to their
        nearest centroid.
        """

        return self._inertia

    @property
    def iterations_run(self):
        return self._iterations_run

    @property
    def inertia_trace(self):
        """
        Retrieve the inertia of the training points at each assignment step.
        """

        return list(self._inertia_trace)

    def assign(self, point):
        """
        Retrieve the index of the centroid that is nearest to `point`.

        The lowest index wins ties.
        """

        point = np.asarray(point, dtype=float)
        if point.shape != (self._centroids.shape[1],):
            raise ValueError("Point of shape {} does not match centroids of dimension {}".format(point.shape, self._centroids.shape[1]))

        return int(np.argmin(np.sum((self._centroids - point) ** 2, axis=1)))

    def assign_all(self, data):
        """
        Retrieve the nearest centroid indices for the rows of `data`.
        """

        data = np.asarray(data, dtype=float)
        if data.ndim != 2 or data.shape[1] != self._centroids.shape[1]:
            raise ValueError("Data of shape {} does not match centroids of dimension {}".format(data.shape, self._centroids.shape[1]))

        return np.argmin(self._squared_distances(data, self._centroids), axis=1)

    def to_dict(self):
        return {
            "centroids": self._centroids.tolist(),
            "inertia": self._inertia,
            "iterations_run": self._iterations_run
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["centroids"], data["inertia"], data["iterations_run"])
