# Core imports
import logging

# Library imports
import numpy as np

# Package imports
from .Defect_Record import METEO_FEATURES
from ..core.Errors import InsufficientDataError
from ..numerics.KMeans_Model import KMeans_Model
from ..numerics.PCA_Model import PCA_Model
from ..settings import Arguments

__all__ = ["Per_Feature_Pattern_Coder", "Joint_Pattern_Coder"]

class Pattern_Coder(object):
    """
    Base class for coders that replace meteorological windows with pattern
    codes found by principal component analysis and K-means clustering.

    Windows are standardized per position before the projection. A fitted
    coder encodes a 6 by `W` window to 6 pattern codes, where `None` marks a
    code that cannot be determined due to absent days.
    """

    def __init__(self, arguments):
        if isinstance(arguments, Arguments):
            settings = arguments.get_settings("featureset")
        else:
            raise TypeError("'arguments' must be an instance of Arguments")

        self._logger = logging.getLogger(__name__)
        self._components = settings.get("pca_components")
        self._clusters = settings.get("clusters")
        self._max_iterations = settings.get("kmeans_iterations")
        self._restarts = settings.get("cluster_restarts")
        self._seed = settings.get("seed")

        self._window_length = None
        self._scalers = []
        self._pca_models = []
        self._kmeans_models = []

    @property
    def type(self):
        """
        Retrieve the name of the coder type, as used in serialized coders.
        """

        raise NotImplementedError("Subclasses must implement the `type` property")

    @property
    def window_length(self):
        return self._window_length

    @property
    def is_fitted(self):
        return self._window_length is not None

    @property
    def max_code(self):
        """
        Retrieve the highest pattern code that the coder produces.
        """

        return self._clusters - 1

    @property
    def pca_models(self):
        return list(self._pca_models)

    @property
    def kmeans_models(self):
        return list(self._kmeans_models)

    @property
    def minimum_windows(self):
        """
        Retrieve the minimum number of complete windows needed for fitting.
        """

        return max(6, self._clusters, self._components + 1)

    def _rows(self, records):
        """
        Convert the `records` to the data rows of each separately fitted model.

        Returns a list of matrices, each with one row per record. Rows with
        absent days contain NaN.
        """

        raise NotImplementedError("Subclasses must implement `_rows(records)`")

    def _window_rows(self, window):
        """
        Convert one 6 by `W` `window` to the data row of each model.
        """

        raise NotImplementedError("Subclasses must implement `_window_rows(window)`")

    def _expand_codes(self, codes):
        """
        Convert the list of codes, one for each model, to the 6 pattern codes.
        """

        raise NotImplementedError("Subclasses must implement `_expand_codes(codes)`")

    def fit(self, records, seed=None):
        """
        Fit the standardization, projection and clustering models to the
        meteorological windows of the given `records`.

        Only windows without absent days take part. Each model is clustered
        with its own seed derived from `seed`, which defaults to the
        configured seed.
        """

        if seed is None:
            seed = self._seed

        lengths = set(record.window_length for record in records)
        if len(lengths) > 1:
            raise ValueError("Records have different window lengths: {}".format(sorted(lengths)))
        if not lengths:
            raise InsufficientDataError("No records to fit the pattern coder to")

        window_length = lengths.pop()
        self._window_length = window_length

        scalers = []
        pca_models = []
        kmeans_models = []
        for index, rows in enumerate(self._rows(records)):
            complete = rows[~np.any(np.isnan(rows), axis=1)]
            if complete.shape[0] < self.minimum_windows:
                self._window_length = None
                raise InsufficientDataError("Pattern coding needs at least {} complete windows, but model {} has {}".format(self.minimum_windows, index, complete.shape[0]))
            if self._components > rows.shape[1]:
                self._window_length = None
                raise ValueError("Cannot project windows of dimension {} onto {} components".format(rows.shape[1], self._components))

            mean = complete.mean(axis=0)
            scale = complete.std(axis=0)
            scale[scale == 0] = 1.0
            standardized = (complete - mean) / scale

            pca = PCA_Model.fit(standardized, self._components)
            kmeans = KMeans_Model.fit(pca.transform(standardized), self._clusters,
                                      seed + index, self._max_iterations,
                                      restarts=self._restarts)
            self._logger.debug("Pattern model %d: %d windows, inertia %.4f after %d iterations",
                               index, complete.shape[0], kmeans.inertia,
                               kmeans.iterations_run)

            scalers.append((mean, scale))
            pca_models.append(pca)
            kmeans_models.append(kmeans)

        self._scalers = scalers
        self._pca_models = pca_models
        self._kmeans_models = kmeans_models
        return self

    def encode(self, window):
        """
        Encode a 6 by `W` meteorological `window` to its 6 pattern codes.

        A code is `None` if its part of the window has absent days.
        """

        if not self.is_fitted:
            raise ValueError("Pattern coder is not fitted")

        window = np.asarray(window, dtype=float)
        if window.shape != (len(METEO_FEATURES), self._window_length):
            raise ValueError("Window of shape {} does not match the coder shape {}".format(window.shape, (len(METEO_FEATURES), self._window_length)))

        codes = []
        rows = self._window_rows(window)
        for row, scaler, pca, kmeans in zip(rows, self._scalers, self._pca_models, self._kmeans_models):
            if np.any(np.isnan(row)):
                codes.append(None)
                continue

            mean, scale = scaler
            codes.append(kmeans.assign(pca.transform((row - mean) / scale)))

        return self._expand_codes(codes)

    def to_dict(self):
        if not self.is_fitted:
            raise ValueError("Pattern coder is not fitted")

        return {
            "type": self.type,
            "class": self.__class__.__name__,
            "clusters": self._clusters,
            "window_length": self._window_length,
            "models": [
                {
                    "mean": scaler[0].tolist(),
                    "scale": scaler[1].tolist(),
                    "pca": pca.to_dict(),
                    "kmeans": kmeans.to_dict()
                }
                for scaler, pca, kmeans in zip(self._scalers, self._pca_models, self._kmeans_models)
            ]
        }

    def load(self, data):
        """
        Restore a fitted coder from the dictionary `data` created by
        `to_dict`.
        """

        if data["type"] != self.type:
            raise ValueError("Cannot load a '{}' coder into a '{}' coder".format(data["type"], self.type))

        self._window_length = int(data["window_length"])
        self._clusters = int(data["clusters"])
        self._scalers = [
            (np.array(model["mean"], dtype=float), np.array(model["scale"], dtype=float))
            for model in data["models"]
        ]
        self._pca_models = [PCA_Model.from_dict(model["pca"]) for model in data["models"]]
        self._kmeans_models = [KMeans_Model.from_dict(model["kmeans"]) for model in data["models"]]
        return self
