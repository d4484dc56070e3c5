# Library imports
import numpy as np

# Package imports
from ..assessment.Grade import Grade

class F1_Report(object):
    """
    Per-grade precision, recall and F1 score with their macro average.

    A grade that occurs in neither the actual nor the predicted labels has an
    F1 score of 0, but it is left out of the macro average.
    """

    def __init__(self, counts):
        counts = np.asarray(counts, dtype=int)
        true_positives = np.diag(counts).astype(float)
        false_positives = counts.sum(axis=0) - true_positives
        false_negatives = counts.sum(axis=1) - true_positives

        self._present = (true_positives + false_positives + false_negatives) > 0

        denominator = 2 * true_positives + false_positives + false_negatives
        self._f1 = np.where(self._present, 2 * true_positives / np.where(self._present, denominator, 1.0), 0.0)

        predicted = true_positives + false_positives
        self._precision = np.where(predicted > 0, true_positives / np.where(predicted > 0, predicted, 1.0), 0.0)
        actual = true_positives + false_negatives
        self._recall = np.where(actual > 0, true_positives / np.where(actual > 0, actual, 1.0), 0.0)

        if np.any(self._present):
            self._macro = float(np.mean(self._f1[self._present]))
        else:
            self._macro = 0.0

    @property
    def per_class(self):
        return self._f1.tolist()

    @property
    def precision(self):
        return self._precision.tolist()

    @property
    def recall(self):
        return self._recall.tolist()

    @property
    def present(self):
        """
        Retrieve for each grade whether it takes part in the macro average.
        """

        return self._present.tolist()

    @property
    def macro(self):
        return self._macro

    def get_f1(self, grade):
        return float(self._f1[Grade(grade).index])

    def to_dict(self):
        return {
            "per_class": dict((grade.label, self.get_f1(grade)) for grade in Grade),
            "precision": dict((grade.label, self._precision[grade.index]) for grade in Grade),
            "recall": dict((grade.label, self._recall[grade.index]) for grade in Grade),
            "macro": self._macro
        }
