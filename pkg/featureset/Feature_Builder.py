# Library imports
import numpy as np

# Package imports
from .Codebook import SELF_FEATURES, SPATIOTEMPORAL_FEATURES
from .Extended_Feature import Extended_Feature, SLOT_COUNT

class Feature_Builder(object):
    """
    Builder of extended feature vectors from defect records using a codebook
    for the self and spatiotemporal features and a fitted pattern coder for
    the meteorological window.
    """

    def __init__(self, codebook, coder):
        if not coder.is_fitted:
            raise ValueError("Pattern coder must be fitted before building features")

        self._codebook = codebook
        self._coder = coder

    @property
    def codebook(self):
        return self._codebook

    @property
    def coder(self):
        return self._coder

    def build(self, record):
        """
        Build the `Extended_Feature` of a `Defect_Record`.
        """

        codes = [
            self._codebook.encode(feature, raw)
            for feature, raw in zip(SELF_FEATURES, record.self_raw)
        ]
        codes.extend(self._coder.encode(record.meteo_window))
        codes.extend(
            self._codebook.encode(feature, raw)
            for feature, raw in zip(SPATIOTEMPORAL_FEATURES, record.st_raw)
        )

        return Extended_Feature(codes)

    def build_matrix(self, records):
        """
        Build the feature vectors of all `records` and stack them.

        Returns the `m` by 18 matrix of values, with NaN for unobserved
        entries, and the mask of observed entries.
        """

        values = np.full((len(records), SLOT_COUNT), np.nan)
        mask = np.zeros((len(records), SLOT_COUNT), dtype=bool)
        for index, record in enumerate(records):
            feature = self.build(record)
            values[index] = feature.values
            mask[index] = feature.mask

        return values, mask

    def max_codes(self):
        """
        Retrieve the highest valid code of each of the 18 slots.
        """

        codes = [self._codebook.max_code(feature) for feature in SELF_FEATURES]
        codes.extend([self._coder.max_code] * 6)
        codes.extend(self._codebook.max_code(feature) for feature in SPATIOTEMPORAL_FEATURES)
        return np.array(codes, dtype=float)
