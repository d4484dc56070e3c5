# Library imports
import numpy as np

# Package imports
from .F1_Report import F1_Report
from ..assessment.Grade import Grade

class Confusion_Matrix(object):
    """
    Counts of actual grades, as rows, against predicted grades, as columns.
    """

    def __init__(self, counts):
        counts = np.array(counts, dtype=int)
        if counts.shape != (len(Grade), len(Grade)):
            raise ValueError("Confusion matrix must have shape {}, not {}".format((len(Grade), len(Grade)), counts.shape))
        if np.any(counts < 0):
            raise ValueError("Confusion matrix counts must be non-negative")

        counts.setflags(write=False)
        self._counts = counts

    @classmethod
    def from_labels(cls, actual, predicted):
        """
        Count the pairs of `actual` and `predicted` grades.
        """

        actual = [Grade(label) for label in actual]
        predicted = [Grade(label) for label in predicted]
        if len(actual) != len(predicted):
            raise ValueError("Got {} actual grades but {} predicted grades".format(len(actual), len(predicted)))
        if not actual:
            raise ValueError("Cannot count an empty list of grades")

        counts = np.zeros((len(Grade), len(Grade)), dtype=int)
        np.add.at(counts, ([label.index for label in actual], [label.index for label in predicted]), 1)
        return cls(counts)

    @property
    def counts(self):
        return self._counts

    @property
    def total(self):
        return int(self._counts.sum())

    def f1_report(self):
        return F1_Report(self._counts)

    def format_table(self, report=None):
        """
        Format the matrix as a text table with the actual grades as rows and
        the predicted grades as columns, followed by the F1 score of each grade
        and the macro F1 score.
        """

        if report is None:
            report = self.f1_report()

        labels = [grade.label for grade in Grade]
        width = max(max(len(label) for label in labels), len(str(self._counts.max()))) + 2
        lines = [
            "Actual \\ predicted".ljust(20) + "".join(label.rjust(width) for label in labels) + "F1".rjust(8)
        ]
        for grade in Grade:
            row = "".join(str(count).rjust(width) for count in self._counts[grade.index])
            lines.append(grade.label.ljust(20) + row + "{:.3f}".format(report.get_f1(grade)).rjust(8))

        lines.append("Overall F1 score: {:.3f}".format(report.macro))
        return "\n".join(lines)

    def to_dict(self):
        return {
            "labels": [grade.label for grade in Grade],
            "counts": self._counts.tolist()
        }
