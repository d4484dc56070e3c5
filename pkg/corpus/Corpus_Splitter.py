# Core imports
import logging
from collections import namedtuple

# Library imports
import numpy as np

# Package imports
from ..assessment.Grade import Grade
from ..settings import Arguments

Corpus_Split = namedtuple("Corpus_Split", ["train", "test", "unlabeled", "unlabeled_truth"])

class Corpus_Splitter(object):
    """
    Stratified split of labeled records into labeled training records,
    labeled test records and records whose labels are stripped.
    """

    def __init__(self, arguments):
        if isinstance(arguments, Arguments):
            settings = arguments.get_settings("corpus_split")
        else:
            raise TypeError("'arguments' must be an instance of Arguments")

        self._logger = logging.getLogger(__name__)
        self._train_counts = [int(count) for count in settings.get("train_counts")]
        self._test_counts = [int(count) for count in settings.get("test_counts")]
        self._unlabeled_count = int(settings.get("unlabeled_count"))
        self._seed = settings.get("seed")

    @property
    def requested_total(self):
        return sum(self._train_counts) + sum(self._test_counts) + self._unlabeled_count

    def scaled_counts(self, record_count):
        """
        Retrieve the train counts, test counts and unlabeled count, scaled down
        proportionally if fewer than `record_count` records are requested.
        """

        total = self.requested_total
        if record_count >= total or total == 0:
            return list(self._train_counts), list(self._test_counts), self._unlabeled_count

        factor = float(record_count) / total
        return (
            [int(np.floor(count * factor)) for count in self._train_counts],
            [int(np.floor(count * factor)) for count in self._test_counts],
            int(np.floor(self._unlabeled_count * factor))
        )

    def split(self, records, seed=None, scale=False):
        """
        Split the labeled `records` into a `Corpus_Split`.

        The training and test records have the configured counts per grade,
        and the unlabeled records are drawn from the remaining records. If
        `scale` is `True`, then the counts are scaled down to fit the number of
        records. The ground truth of the unlabeled records is returned
        separately as `(key, grade)` pairs. All parts keep the record order.
        """

        if any(not record.is_labeled for record in records):
            raise ValueError("Only labeled records can be split")

        if scale:
            train_counts, test_counts, unlabeled_count = self.scaled_counts(len(records))
        else:
            train_counts, test_counts, unlabeled_count = self._train_counts, self._test_counts, self._unlabeled_count

        random_state = np.random.RandomState(self._seed if seed is None else seed)
        train = []
        test = []
        remaining = []
        for grade in Grade:
            indices = [index for index, record in enumerate(records) if record.label == grade]
            needed = train_counts[grade.index] + test_counts[grade.index]
            if len(indices) < needed:
                raise ValueError("Grade '{}' has {} records, but the split needs {}".format(grade.label, len(indices), needed))

            order = [indices[index] for index in random_state.permutation(len(indices))]
            train.extend(order[:train_counts[grade.index]])
            test.extend(order[train_counts[grade.index]:needed])
            remaining.extend(order[needed:])

        if len(remaining) < unlabeled_count:
            raise ValueError("Only {} records remain, but the split needs {} unlabeled records".format(len(remaining), unlabeled_count))

        remaining.sort()
        unlabeled = sorted(remaining[index] for index in random_state.permutation(len(remaining))[:unlabeled_count])

        self._logger.info("Split %d records into %d training, %d test and %d unlabeled records",
                          len(records), len(train), len(test), len(unlabeled))

        return Corpus_Split(
            [records[index] for index in sorted(train)],
            [records[index] for index in sorted(test)],
            [records[index].without_label() for index in unlabeled],
            [(records[index].key, records[index].label) for index in unlabeled]
        )
