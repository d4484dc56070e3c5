# Core imports
import logging

# Library imports
import numpy as np

# Package imports
from .Model_Bundle import Model_Bundle
from ..core.Errors import PipelineStageError
from ..core.Import_Manager import Import_Manager
from ..corpus.Corpus_Generator import REFERENCE_CODEBOOK
from ..corpus.Record_Store import Prediction
from ..embedding.Embedding_Trainer import Embedding_Trainer
from ..featureset.Codebook import Codebook
from ..featureset.Feature_Builder import Feature_Builder
from ..imputation.Matrix_Factorization import Matrix_Factorization
from ..semisupervised.Prototype_Classifier import Prototype_Classifier
from ..semisupervised.Prototype_Refiner import Prototype_Refiner
from ..semisupervised.Prototype_Set import Prototype_Set
from ..settings import Arguments

class Condition_Pipeline(object):
    """
    Condition prediction pipeline from defect records to grades.

    Fitting codes the features of all training records, fills their missing
    entries with the low-rank factorization, trains the embedding on the
    labeled records, estimates the class centers and corrects them with the
    unlabeled records. Prediction follows the same path, folding new records
    into the training factors.
    """

    # Settings components whose values are stored in the model bundle.
    SNAPSHOT_COMPONENTS = [
        "featureset", "imputation", "embedding", "semisupervised"
    ]

    def __init__(self, arguments):
        if isinstance(arguments, Arguments):
            self._settings = arguments.get_settings("pipeline")
        else:
            raise TypeError("'arguments' must be an instance of Arguments")

        self._logger = logging.getLogger(__name__)
        self._arguments = arguments
        self._import_manager = Import_Manager()
        self._featureset = arguments.get_settings("featureset")
        self._round_codes = arguments.get_settings("imputation").get("round_codes")

        self._factorization = Matrix_Factorization(arguments)
        self._trainer = Embedding_Trainer(arguments)
        self._refiner = Prototype_Refiner(arguments)
        self._classifier = Prototype_Classifier()

        self._bundle = None
        self._builder = None

    @property
    def bundle(self):
        return self._bundle

    def load_codebook(self):
        """
        Load the configured codebook, or the reference codebook if no
        codebook is configured.
        """

        file_name = self._settings.get("codebook")
        return Codebook.load(file_name if file_name else REFERENCE_CODEBOOK)

    def _create_coder(self, class_name):
        coder_class = self._import_manager.load_class(class_name, relative_module="featureset")
        return coder_class(self._arguments)

    def _snapshot(self, seed):
        snapshot = {"pipeline": {"seed": seed}}
        for component in self.SNAPSHOT_COMPONENTS:
            settings = self._arguments.get_settings(component)
            snapshot[component] = dict(settings.get_all())

        return snapshot

    def _stage(self, name, function, *args, **kwargs):
        """
        Run a pipeline stage, wrapping errors with the name of the stage.
        """

        try:
            return function(*args, **kwargs)
        except Exception as e:
            raise PipelineStageError(name, e)

    def _fill(self, values, mask, factors):
        max_codes = self._builder.max_codes() if self._round_codes else None
        return self._factorization.impute(values, mask, factors, max_codes=max_codes)

    def fit(self, records, codebook=None, seed=None):
        """
        Fit the pipeline to the training `records`, of which the labeled ones
        have their grade as label and the others are unlabeled.

        The `codebook` defaults to the configured codebook and the `seed` to
        the configured seed. Returns the `Model_Bundle`.
        """

        if seed is None:
            seed = self._settings.get("seed")
        if codebook is None:
            codebook = self._stage("codebook", self.load_codebook)

        labeled = np.array([record.is_labeled for record in records], dtype=bool)
        labels = [record.label for record in records if record.is_labeled]

        coder = self._create_coder(self._featureset.get("coder_class"))
        self._stage("pattern_coding", coder.fit, records, seed=seed)
        self._builder = Feature_Builder(codebook, coder)
        values, mask = self._stage("features", self._builder.build_matrix, records)
        self._logger.info("Coded %d records, %d with missing entries",
                          len(records), int(np.sum(~np.all(mask, axis=1))))

        factors = self._stage("imputation", self._factorization.factorize, values, mask, seed=seed)
        filled = self._stage("imputation", self._fill, values, mask, factors)

        params, loss_trace = self._stage("embedding", self._trainer.train,
                                         filled[labeled], labels, seed=seed)
        embeddings = self._stage("embedding", params.forward_batch, filled)

        prototypes = self._stage("prototypes", Prototype_Set.compute, embeddings[labeled], labels)
        corrected = self._stage("refinement", self._refiner.refine, prototypes, embeddings[~labeled])

        self._bundle = Model_Bundle(codebook, coder.to_dict(), factors, params,
                                    prototypes, corrected, self._snapshot(seed),
                                    max_codes=self._builder.max_codes(),
                                    loss_trace=loss_trace)
        return self._bundle

    def use(self, bundle):
        """
        Use a previously fitted `Model_Bundle` for prediction.
        """

        coder = self._create_coder(bundle.pattern_coder["class"])
        coder.load(bundle.pattern_coder)
        imputation = bundle.settings.get("imputation", {})
        if "round_codes" in imputation:
            self._round_codes = imputation["round_codes"]

        self._builder = Feature_Builder(bundle.codebook, coder)
        self._bundle = bundle

    def load(self, file_name):
        self.use(Model_Bundle.load(file_name))

    def save(self, file_name):
        if self._bundle is None:
            raise ValueError("Pipeline is not fitted")

        self._bundle.save(file_name)

    def embed(self, records):
        """
        Embed the `records` with the fitted pipeline, filling their missing
        entries against the training factors.
        """

        if self._bundle is None:
            raise ValueError("Pipeline is not fitted")

        values, mask = self._stage("features", self._builder.build_matrix, records)
        folded = self._stage("imputation", self._factorization.fold_in, values, mask, self._bundle.factors)
        filled = self._stage("imputation", self._fill, values, mask, folded)
        return self._stage("embedding", self._bundle.mlp.forward_batch, filled)

    def predict(self, records, corrected=True):
        """
        Predict the grades of the `records`.

        The corrected class centers are used unless `corrected` is `False`.
        Returns a list of `Prediction`s with the record key, the grade and
        the posterior probabilities of the grades.
        """

        if not records:
            return []

        embeddings = self.embed(records)
        prototypes = self._bundle.corrected_prototypes if corrected else self._bundle.prototypes
        grades, posteriors = self._classifier.predict_all(embeddings, prototypes)
        return [
            Prediction(record.key, grade, probabilities.tolist())
            for record, grade, probabilities in zip(records, grades, posteriors)
        ]
