# Core imports
import json

# Library imports
import numpy as np

# Package imports
from ..embedding.MLP_Parameters import MLP_Parameters
from ..featureset.Codebook import Codebook
from ..imputation.Factor_Pair import Factor_Pair
from ..semisupervised.Corrected_Prototype_Set import Corrected_Prototype_Set
from ..semisupervised.Prototype_Set import Prototype_Set

class Model_Bundle(object):
    """
    Everything that a fitted pipeline needs to predict, stored as one JSON
    file: the codebook, the fitted pattern coder, the factors of the training
    feature matrix, the embedding network, the supervised and corrected
    class centers and a snapshot of the settings.
    """

    FORMAT_VERSION = 1

    def __init__(self, codebook, pattern_coder, factors, mlp, prototypes,
                 corrected_prototypes, settings, max_codes=None,
                 loss_trace=None):
        """
        Initialize the bundle. The `pattern_coder` is the dictionary form of a
        fitted `Pattern_Coder`, and `settings` is a dictionary of component
        names to dictionaries of setting values.
        """

        self.codebook = codebook
        self.pattern_coder = pattern_coder
        self.factors = factors
        self.mlp = mlp
        self.prototypes = prototypes
        self.corrected_prototypes = corrected_prototypes
        self.settings = settings
        self.max_codes = None if max_codes is None else np.asarray(max_codes, dtype=float)
        self.loss_trace = list(loss_trace) if loss_trace is not None else []

    def to_dict(self):
        return {
            "format_version": self.FORMAT_VERSION,
            "codebook": self.codebook.to_dict(),
            "pattern_coder": self.pattern_coder,
            "factors": self.factors.to_dict(),
            "mlp": self.mlp.to_dict(),
            "prototypes": self.prototypes.to_dict(),
            "corrected_prototypes": self.corrected_prototypes.to_dict(),
            "settings": self.settings,
            "max_codes": None if self.max_codes is None else self.max_codes.tolist(),
            "loss_trace": [float(loss) for loss in self.loss_trace]
        }

    @classmethod
    def from_dict(cls, data):
        version = data.get("format_version")
        if version != cls.FORMAT_VERSION:
            raise ValueError("Unsupported model bundle format version {}".format(version))

        return cls(
            Codebook.from_dict(data["codebook"]),
            data["pattern_coder"],
            Factor_Pair.from_dict(data["factors"]),
            MLP_Parameters.from_dict(data["mlp"]),
            Prototype_Set.from_dict(data["prototypes"]),
            Corrected_Prototype_Set.from_dict(data["corrected_prototypes"]),
            data["settings"],
            max_codes=data.get("max_codes"),
            loss_trace=data.get("loss_trace")
        )

    def save(self, file_name):
        """
        Write the bundle to a JSON file. Keys are sorted so that equal
        bundles give identical files.
        """

        with open(file_name, "w") as bundle_file:
            json.dump(self.to_dict(), bundle_file, sort_keys=True)
            bundle_file.write("\n")

    @classmethod
    def load(cls, file_name):
        with open(file_name) as bundle_file:
            try:
                data = json.load(bundle_file)
            except ValueError as e:
                raise ValueError("Model bundle '{}' is not valid JSON: {}".format(file_name, e))

        try:
            return cls.from_dict(data)
        except KeyError as e:
            raise ValueError("Model bundle '{}' lacks the entry {}".format(file_name, e))
