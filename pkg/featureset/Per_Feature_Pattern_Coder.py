# Library imports
import numpy as np

# Package imports
from .Pattern_Coder import Pattern_Coder

class Per_Feature_Pattern_Coder(Pattern_Coder):
    """
    Pattern coder with an independent projection and clustering for each of
    the 6 meteorological features, so that each slot carries the temporal
    pattern of its own feature.
    """

    @property
    def type(self):
        return "per_feature"

    def _rows(self, records):
        windows = np.array([record.meteo_window for record in records])
        return [windows[:, feature, :] for feature in range(windows.shape[1])]

    def _window_rows(self, window):
        return [window[feature] for feature in range(window.shape[0])]

    def _expand_codes(self, codes):
        return codes
