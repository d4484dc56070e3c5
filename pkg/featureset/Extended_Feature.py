# Library imports
import numpy as np

# Package imports
from .Codebook import SELF_FEATURES, SPATIOTEMPORAL_FEATURES
from .Defect_Record import METEO_FEATURES

# Fixed slot order of the extended feature vector.
SLOT_NAMES = SELF_FEATURES + METEO_FEATURES + SPATIOTEMPORAL_FEATURES
SLOT_COUNT = len(SLOT_NAMES)

class Extended_Feature(object):
    """
    Extended feature vector of a record: 8 self feature codes, 6
    meteorological pattern codes and 4 spatiotemporal codes, with a mask that
    is `True` for observed entries. Unobserved entries hold NaN.
    """

    def __init__(self, codes):
        """
        Initialize the vector from a sequence of 18 `codes`, where `None` is an
        unobserved entry.
        """

        codes = list(codes)
        if len(codes) != SLOT_COUNT:
            raise ValueError("Extended feature needs {} entries, not {}".format(SLOT_COUNT, len(codes)))

        self._mask = np.array([code is not None for code in codes], dtype=bool)
        self._values = np.array([np.nan if code is None else code for code in codes], dtype=float)
        observed = self._values[self._mask]
        if not np.all(np.isfinite(observed)) or np.any(observed != np.round(observed)):
            raise ValueError("Observed entries of an extended feature must be integer codes")

        self._values.setflags(write=False)
        self._mask.setflags(write=False)

    @property
    def values(self):
        return self._values

    @property
    def mask(self):
        return self._mask

    @property
    def missing_count(self):
        return int(SLOT_COUNT - self._mask.sum())

    def get(self, slot):
        """
        Retrieve the code of the slot with the given name, or `None` if it is
        not observed.
        """

        index = SLOT_NAMES.index(slot)
        if not self._mask[index]:
            return None

        return int(self._values[index])
