# Library imports
import numpy as np

# Package imports
from ..assessment.Grade import Grade

METEO_FEATURES = ["temp", "hum", "wind", "rain", "lightning", "haze"]

class Defect_Record(object):
    """
    Observation of one line segment in one week.

    The record holds the raw values of the 8 self features and the 4
    spatiotemporal features, where `None` is an absent value, and the 6 by `W`
    meteorological window, where NaN is an absent day. Only labeled records
    have a `Grade` label.
    """

    def __init__(self, segment_id, week, self_raw, meteo_window, st_raw,
                 label=None):
        self._segment_id = str(segment_id)
        self._week = int(week)

        self._self_raw = tuple(self_raw)
        if len(self._self_raw) != 8:
            raise ValueError("Record {} needs 8 self features, not {}".format(self.key, len(self._self_raw)))

        self._st_raw = tuple(st_raw)
        if len(self._st_raw) != 4:
            raise ValueError("Record {} needs 4 spatiotemporal features, not {}".format(self.key, len(self._st_raw)))

        window = np.array(meteo_window, dtype=float)
        if window.ndim != 2 or window.shape[0] != len(METEO_FEATURES) or window.shape[1] < 1:
            raise ValueError("Record {} needs a meteorological window of 6 rows, not shape {}".format(self.key, window.shape))

        window.setflags(write=False)
        self._meteo_window = window

        if label is not None and not isinstance(label, Grade):
            label = Grade(label)

        self._label = label

    @property
    def segment_id(self):
        return self._segment_id

    @property
    def week(self):
        return self._week

    @property
    def key(self):
        """
        Retrieve the `(segment_id, week)` pair that identifies the record.
        """

        return (self._segment_id, self._week)

    @property
    def self_raw(self):
        return self._self_raw

    @property
    def st_raw(self):
        return self._st_raw

    @property
    def meteo_window(self):
        return self._meteo_window

    @property
    def window_length(self):
        return self._meteo_window.shape[1]

    @property
    def label(self):
        return self._label

    @property
    def is_labeled(self):
        return self._label is not None

    def has_complete_window(self, feature=None):
        """
        Check whether the meteorological window has no absent days, either for
        the row of one `feature` index or for the whole window.
        """

        if feature is None:
            return not np.any(np.isnan(self._meteo_window))

        return not np.any(np.isnan(self._meteo_window[feature]))

    def with_label(self, label):
        """
        Create a copy of the record with the given `label`, or without a label
        if `label` is `None`.
        """

        return Defect_Record(self._segment_id, self._week, self._self_raw,
                             self._meteo_window, self._st_raw, label=label)

    def without_label(self):
        return self.with_label(None)

    def __eq__(self, other):
        if not isinstance(other, Defect_Record):
            return NotImplemented

        return (
            self.key == other.key and
            self._self_raw == other.self_raw and
            self._st_raw == other.st_raw and
            self._label == other.label and
            self._meteo_window.shape == other.meteo_window.shape and
            np.array_equal(np.isnan(self._meteo_window), np.isnan(other.meteo_window)) and
            np.array_equal(np.nan_to_num(self._meteo_window), np.nan_to_num(other.meteo_window))
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    __hash__ = None

    def __repr__(self):
        label = self._label.label if self._label is not None else None
        return "Defect_Record({!r}, {}, label={})".format(self._segment_id, self._week, label)
