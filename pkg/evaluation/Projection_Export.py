# Core imports
import csv
from collections import namedtuple

# Library imports
import numpy as np

# Package imports
from ..assessment.Grade import Grade
from ..core.Errors import InsufficientDataError
from ..numerics.PCA_Model import PCA_Model

Projection_Row = namedtuple("Projection_Row", ["pc1", "pc2", "grade", "kind"])

class Projection_Export(object):
    """
    Two-dimensional projection of embeddings and class centers onto the
    first principal components of the embeddings, for plotting.

    The coordinates of all rows are jointly scaled to [0, 1].
    """

    KINDS = ("sample", "center_supervised", "center_semisupervised")

    def project(self, embeddings, labels, supervised, corrected):
        """
        Project the matrix of `embeddings` with their `Grade` `labels` as well
        as the centers of the `supervised` and `corrected` prototype sets.

        Returns a list of `Projection_Row`s: first the samples in order, then
        the supervised centers and finally the corrected centers, both in
        grade order.
        """

        embeddings = np.asarray(embeddings, dtype=float)
        if embeddings.ndim != 2 or embeddings.shape[0] < 2:
            raise InsufficientDataError("Projection needs at least 2 embeddings")
        if len(labels) != embeddings.shape[0]:
            raise ValueError("Got {} embeddings but {} labels".format(embeddings.shape[0], len(labels)))

        k = min(2, embeddings.shape[0] - 1, embeddings.shape[1])
        pca = PCA_Model.fit(embeddings, k)

        points = np.vstack([embeddings, supervised.centers, corrected.centers])
        projected = np.zeros((points.shape[0], 2))
        projected[:, :k] = pca.transform(points)

        low = projected.min(axis=0)
        spread = projected.max(axis=0) - low
        scaled = np.where(spread > 0, (projected - low) / np.where(spread > 0, spread, 1.0), 0.0)

        grades = [Grade(label) for label in labels] + list(Grade) + list(Grade)
        kinds = [self.KINDS[0]] * embeddings.shape[0] + [self.KINDS[1]] * len(Grade) + [self.KINDS[2]] * len(Grade)
        return [
            Projection_Row(float(point[0]), float(point[1]), grade, kind)
            for point, grade, kind in zip(scaled, grades, kinds)
        ]

    def write(self, rows, file_name):
        with open(file_name, "w", newline="") as projection_file:
            writer = csv.writer(projection_file)
            writer.writerow(["pc1", "pc2", "grade", "kind"])
            for row in rows:
                writer.writerow([repr(row.pc1), repr(row.pc2), row.grade.label, row.kind])
