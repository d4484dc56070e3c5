# Package imports
from .Prototype_Set import Prototype_Set
from ..numerics.Matrix import Matrix

class Corrected_Prototype_Set(Prototype_Set):
    """
    Class centers after correction with pseudo-labeled unlabeled embeddings.

    Besides the centers, the set keeps the confidence `alpha` in the labeled
    centers, the number of refinement iterations, the number of pseudo-labeled
    embeddings per grade in the last iteration and the largest center
    displacement of each iteration.
    """

    def __init__(self, centers, alpha, iterations_run, pseudo_counts,
                 displacements=None):
        super(Corrected_Prototype_Set, self).__init__(centers, pseudo_counts)
        if not 0.0 <= alpha <= 1.0:
            raise ValueError("Alpha must be between 0 and 1, not {}".format(alpha))

        self._alpha = float(alpha)
        self._iterations_run = int(iterations_run)
        self._displacements = list(displacements) if displacements is not None else []

    @property
    def alpha(self):
        return self._alpha

    @property
    def iterations_run(self):
        return self._iterations_run

    @property
    def pseudo_counts(self):
        return self.support_counts

    @property
    def displacements(self):
        return list(self._displacements)

    def to_dict(self):
        return {
            "centers": Matrix.to_dict(self.centers),
            "alpha": self._alpha,
            "iterations_run": self._iterations_run,
            "pseudo_counts": self.pseudo_counts,
            "displacements": [float(displacement) for displacement in self._displacements]
        }

    @classmethod
    def from_dict(cls, data):
        return cls(Matrix.from_dict(data["centers"]), data["alpha"],
                   data["iterations_run"], data["pseudo_counts"],
                   data.get("displacements"))
