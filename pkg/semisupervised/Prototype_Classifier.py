# Library imports
import numpy as np

# Package imports
from ..assessment.Grade import Grade

class Prototype_Classifier(object):
    """
    Classification of embeddings by their distances to class centers.

    The posterior probability of a grade is the softmax of the negative
    Euclidean distances to the centers. The predicted grade is the one with
    the nearest center, which is the one with the highest posterior, and the
    lowest grade wins ties.
    """

    def _check(self, embeddings, centers):
        embeddings = np.asarray(embeddings, dtype=float)
        centers = np.asarray(centers, dtype=float)
        if centers.ndim != 2 or centers.shape[0] != len(Grade):
            raise ValueError("Need {} class centers, not shape {}".format(len(Grade), centers.shape))
        if embeddings.shape[-1] != centers.shape[1]:
            raise ValueError("Embeddings of dimension {} do not match centers of dimension {}".format(embeddings.shape[-1], centers.shape[1]))
        if not np.all(np.isfinite(embeddings)) or not np.all(np.isfinite(centers)):
            raise ValueError("Embeddings and centers must be finite")

        return embeddings, centers

    def distances(self, embeddings, centers):
        """
        Calculate the distances of a matrix of `embeddings` to all `centers`.
        """

        embeddings, centers = self._check(embeddings, centers)
        difference = embeddings[:, np.newaxis, :] - centers[np.newaxis, :, :]
        return np.sqrt(np.sum(difference ** 2, axis=2))

    def posteriors(self, embeddings, centers):
        """
        Calculate the class posteriors of every row of `embeddings`.
        """

        logits = -self.distances(embeddings, centers)
        logits -= logits.max(axis=1, keepdims=True)
        exponents = np.exp(logits)
        return exponents / exponents.sum(axis=1, keepdims=True)

    def class_posteriors(self, v, centers):
        """
        Calculate the class posteriors of one embedding `v`.
        """

        return self.posteriors(np.asarray(v, dtype=float)[np.newaxis, :], centers)[0]

    def nearest(self, embeddings, centers):
        """
        Retrieve the class index of the nearest center of every row of
        `embeddings`.
        """

        return np.argmin(self.distances(embeddings, centers), axis=1)

    def classify(self, v, centers):
        """
        Classify one embedding `v` to the `Grade` of its nearest center.
        """

        index = self.nearest(np.asarray(v, dtype=float)[np.newaxis, :], centers)[0]
        return Grade.from_index(index)

    def predict(self, v, prototypes):
        """
        Predict the `Grade` and posteriors of one embedding `v` against the
        centers of a prototype set, such as a `Corrected_Prototype_Set`.
        """

        return self.classify(v, prototypes.centers), self.class_posteriors(v, prototypes.centers)

    def predict_all(self, embeddings, prototypes):
        """
        Predict the grades and posteriors of every row of `embeddings`.
        """

        indices = self.nearest(embeddings, prototypes.centers)
        grades = [Grade.from_index(index) for index in indices]
        return grades, self.posteriors(embeddings, prototypes.centers)
