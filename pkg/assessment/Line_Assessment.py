# Core imports
import logging
from collections import namedtuple

# Library imports
import numpy as np

# Package imports
from .Analytic_Hierarchy import Analytic_Hierarchy
from .Grade import Grade
from ..settings import Arguments

Indicator_Deduction = namedtuple("Indicator_Deduction", [
    "unit_index", "indicator_index", "weight", "demerit"
])
Unit_Score = namedtuple("Unit_Score", ["unit_index", "score"])
Line_Score = namedtuple("Line_Score", ["score", "grade", "unit_scores"])

UNIT_COUNT = 8

class Line_Assessment(object):
    """
    Scoring of equipment units and line sections from indicator deductions.

    Each equipment unit is scored with the weighted sum of the demerit points
    of its indicators. A line section starts at 100 points and loses the
    weighted unit scores, and the final score determines its grade.
    """

    def __init__(self, arguments):
        if isinstance(arguments, Arguments):
            settings = arguments.get_settings("assessment")
        else:
            raise TypeError("'arguments' must be an instance of Arguments")

        self._logger = logging.getLogger(__name__)
        self._unit_names = list(settings.get("unit_names"))
        self._grade_bounds = [float(bound) for bound in settings.get("grade_bounds")]
        if sorted(self._grade_bounds) != self._grade_bounds:
            raise ValueError("Grade bounds must be increasing, not {}".format(self._grade_bounds))

        matrix = settings.get("unit_comparison_matrix")
        if matrix:
            weights, ratio = Analytic_Hierarchy().weights(matrix)
            self._logger.info("Derived unit weights %s with consistency ratio %.4f",
                              np.round(weights, 3).tolist(), ratio)
            if ratio >= Analytic_Hierarchy.CONSISTENCY_THRESHOLD:
                self._logger.warning("Unit comparison matrix is inconsistent: consistency ratio %.4f", ratio)
        else:
            weights = settings.get("unit_weights")

        self._unit_weights = self._check_weights(weights)

    @property
    def unit_names(self):
        return self._unit_names

    @property
    def unit_weights(self):
        return self._unit_weights

    @property
    def grade_bounds(self):
        return self._grade_bounds

    def _check_weights(self, weights):
        weights = np.asarray(weights, dtype=float)
        if weights.shape != (UNIT_COUNT,):
            raise ValueError("Exactly {} unit weights are required, not {}".format(UNIT_COUNT, weights.size))
        if not np.all(np.isfinite(weights)) or np.any(weights < 0):
            raise ValueError("Unit weights must be finite and non-negative")
        if abs(weights.sum() - 1.0) > 1e-6:
            raise ValueError("Unit weights must sum to 1, not {}".format(weights.sum()))

        return weights

    def score_unit(self, deductions, unit_index=None):
        """
        Score one equipment unit from its list of `Indicator_Deduction`s.

        If `unit_index` is not given, then it is taken from the deductions.
        An empty list of deductions scores 0.
        """

        score = 0.0
        for deduction in deductions:
            if unit_index is None:
                unit_index = deduction.unit_index
            elif deduction.unit_index != unit_index:
                raise ValueError("Deductions of unit {} and {} cannot be scored together".format(unit_index, deduction.unit_index))

            if not np.isfinite(deduction.weight) or deduction.weight < 0:
                raise ValueError("Deduction weight must be finite and non-negative, not {}".format(deduction.weight))
            if not np.isfinite(deduction.demerit) or deduction.demerit < 0:
                raise ValueError("Deduction demerit must be finite and non-negative, not {}".format(deduction.demerit))

            score += deduction.weight * deduction.demerit

        return Unit_Score(unit_index, score)

    def score_line(self, unit_scores, weights=None):
        """
        Calculate the score of a line section from its 8 `unit_scores`.

        The `weights` default to the configured unit weights. The result is
        clamped to the range [0, 100].
        """

        unit_scores = np.asarray(unit_scores, dtype=float)
        if unit_scores.shape != (UNIT_COUNT,):
            raise ValueError("Exactly {} unit scores are required, not {}".format(UNIT_COUNT, unit_scores.size))

        if weights is None:
            weights = self._unit_weights
        else:
            weights = self._check_weights(weights)

        score = 100.0 - np.dot(weights, unit_scores)
        return float(min(100.0, max(0.0, score)))

    def grade_of(self, score):
        """
        Convert a line section `score` to its `Grade`.

        Each grade covers a half-open interval whose upper bound belongs to
        it, except for the worst grade which also includes 0.
        """

        if not 0.0 <= score <= 100.0:
            raise ValueError("Score must be between 0 and 100, not {}".format(score))

        for grade, bound in zip((Grade.SERIOUS, Grade.ABNORMAL, Grade.ATTENTION), self._grade_bounds):
            if score <= bound:
                return grade

        return Grade.NORMAL

    def assess(self, deductions):
        """
        Assess a line section from all its `Indicator_Deduction`s.

        Returns a `Line_Score` with the line score, its grade and the scores
        of all 8 units in unit order.
        """

        per_unit = dict((index, []) for index in range(1, UNIT_COUNT + 1))
        for deduction in deductions:
            if deduction.unit_index not in per_unit:
                raise ValueError("Unit index must be between 1 and {}, not {}".format(UNIT_COUNT, deduction.unit_index))

            per_unit[deduction.unit_index].append(deduction)

        unit_scores = [
            self.score_unit(per_unit[index], unit_index=index)
            for index in range(1, UNIT_COUNT + 1)
        ]
        score = self.score_line([unit.score for unit in unit_scores])
        return Line_Score(score, self.grade_of(score), unit_scores)
