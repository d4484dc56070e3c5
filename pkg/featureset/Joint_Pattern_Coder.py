# Library imports
import numpy as np

# Package imports
from .Defect_Record import METEO_FEATURES
from .Pattern_Coder import Pattern_Coder

class Joint_Pattern_Coder(Pattern_Coder):
    """
    Pattern coder with one projection and clustering over the whole
    meteorological window. Its single pattern code fills all 6
    meteorological slots, and an absent day anywhere masks all of them.
    """

    @property
    def type(self):
        return "joint"

    def _rows(self, records):
        windows = np.array([record.meteo_window for record in records])
        return [windows.reshape(windows.shape[0], -1)]

    def _window_rows(self, window):
        return [window.reshape(-1)]

    def _expand_codes(self, codes):
        return codes * len(METEO_FEATURES)
