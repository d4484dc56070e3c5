# Library imports
import numpy as np

# Package imports
from ..assessment.Grade import Grade
from ..core.Errors import InsufficientDataError
from ..numerics.Matrix import Matrix

class Prototype_Set(object):
    """
    Class centers in embedding space, one for each grade in grade order,
    together with the number of labeled samples that each center is the mean
    of.
    """

    def __init__(self, centers, support_counts):
        self._centers = np.array(centers, dtype=float)
        self._support_counts = [int(count) for count in support_counts]
        if self._centers.ndim != 2 or self._centers.shape[0] != len(Grade):
            raise ValueError("Need {} class centers, not shape {}".format(len(Grade), self._centers.shape))
        if len(self._support_counts) != len(Grade):
            raise ValueError("Need {} support counts, not {}".format(len(Grade), len(self._support_counts)))
        if not np.all(np.isfinite(self._centers)):
            raise ValueError("Class centers must be finite")

        self._centers.setflags(write=False)

    @staticmethod
    def label_indices(labels):
        """
        Convert a sequence of `Grade` labels to an array of class indices.
        """

        return np.array([Grade(label).index for label in labels], dtype=int)

    @classmethod
    def compute(cls, embeddings, labels):
        """
        Compute the class centers as the means of the `embeddings` of each
        grade in `labels`.

        Every grade must have at least one labeled embedding.
        """

        embeddings = np.asarray(embeddings, dtype=float)
        indices = cls.label_indices(labels)
        if embeddings.ndim != 2 or embeddings.shape[0] != indices.shape[0]:
            raise ValueError("Embeddings of shape {} do not match {} labels".format(embeddings.shape, indices.shape[0]))

        centers = np.zeros((len(Grade), embeddings.shape[1]))
        counts = np.bincount(indices, minlength=len(Grade))
        for grade in Grade:
            if counts[grade.index] == 0:
                raise InsufficientDataError("Grade '{}' has no labeled samples".format(grade.label))

            centers[grade.index] = embeddings[indices == grade.index].mean(axis=0)

        return cls(centers, counts)

    @property
    def centers(self):
        return self._centers

    @property
    def support_counts(self):
        return list(self._support_counts)

    def get_center(self, grade):
        return self._centers[Grade(grade).index]

    def to_dict(self):
        return {
            "centers": Matrix.to_dict(self._centers),
            "support_counts": self._support_counts
        }

    @classmethod
    def from_dict(cls, data):
        return cls(Matrix.from_dict(data["centers"]), data["support_counts"])
