# Core imports
import logging

# Library imports
import numpy as np

# Package imports
from .Corrected_Prototype_Set import Corrected_Prototype_Set
from .Prototype_Classifier import Prototype_Classifier
from ..assessment.Grade import Grade
from ..settings import Arguments

class Prototype_Refiner(object):
    """
    Correction of class centers with unlabeled embeddings.

    Each iteration pseudo-labels the unlabeled embeddings with their nearest
    current center and blends the labeled center, with weight `alpha`, with
    the mean of the embeddings that are pseudo-labeled with its grade. The
    iterations stop once no center moves more than the tolerance.
    """

    def __init__(self, arguments):
        if isinstance(arguments, Arguments):
            settings = arguments.get_settings("semisupervised")
        else:
            raise TypeError("'arguments' must be an instance of Arguments")

        self._logger = logging.getLogger(__name__)
        self._alpha = settings.get("alpha")
        self._tolerance = settings.get("refine_tolerance")
        self._max_iterations = settings.get("refine_iterations")
        self._anchor = settings.get("anchor")
        self._classifier = Prototype_Classifier()

    @property
    def alpha(self):
        return self._alpha

    def refine(self, base, unlabeled, alpha=None):
        """
        Refine the centers of the `Prototype_Set` `base` with the matrix of
        `unlabeled` embeddings.

        The `alpha` defaults to the configured confidence. With the `original`
        anchor, every iteration blends with the centers of `base`; with the
        `chained` anchor it blends with the centers of the previous iteration.
        A grade without pseudo-labeled embeddings keeps its anchor center.

        Returns a `Corrected_Prototype_Set`.
        """

        if alpha is None:
            alpha = self._alpha
        if not 0.0 <= alpha <= 1.0:
            raise ValueError("Alpha must be between 0 and 1, not {}".format(alpha))

        unlabeled = np.asarray(unlabeled, dtype=float)
        if unlabeled.size == 0:
            return Corrected_Prototype_Set(base.centers, alpha, 0, [0] * len(Grade))

        centers = np.array(base.centers)
        displacements = []
        counts = np.zeros(len(Grade), dtype=int)
        for iteration in range(1, self._max_iterations + 1):
            assignments = self._classifier.nearest(unlabeled, centers)
            counts = np.bincount(assignments, minlength=len(Grade))

            anchors = base.centers if self._anchor == "original" else centers
            new_centers = np.array(anchors)
            for grade in Grade:
                members = unlabeled[assignments == grade.index]
                if members.shape[0] == 0:
                    self._logger.debug("Iteration %d: no embeddings pseudo-labeled as %s", iteration, grade.label)
                    continue

                new_centers[grade.index] = alpha * anchors[grade.index] + (1.0 - alpha) * members.mean(axis=0)

            displacement = float(np.max(np.sqrt(np.sum((new_centers - centers) ** 2, axis=1))))
            displacements.append(displacement)
            centers = new_centers
            self._logger.debug("Refinement iteration %d: displacement %.3g, pseudo counts %s",
                               iteration, displacement, counts.tolist())
            if displacement < self._tolerance:
                break

        self._logger.info("Refined class centers in %d iterations with %d unlabeled embeddings",
                          len(displacements), unlabeled.shape[0])

        return Corrected_Prototype_Set(centers, alpha, len(displacements),
                                       counts, displacements)
