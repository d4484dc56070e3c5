# Core imports
import logging

# Library imports
import numpy as np

# Package imports
from .MLP_Parameters import MLP_Parameters
from .Prototype_Loss import Prototype_Loss
from ..assessment.Grade import Grade
from ..core.Errors import InsufficientDataError, NumericFailureError
from ..semisupervised.Prototype_Set import Prototype_Set
from ..settings import Arguments

class Embedding_Trainer(object):
    """
    Mini-batch gradient descent training of the embedding network on labeled
    feature vectors with the prototype loss.
    """

    def __init__(self, arguments):
        if isinstance(arguments, Arguments):
            settings = arguments.get_settings("embedding")
        else:
            raise TypeError("'arguments' must be an instance of Arguments")

        self._logger = logging.getLogger(__name__)
        self._layer_dims = list(settings.get("layer_dims"))
        self._epochs = settings.get("epochs")
        self._learning_rate = settings.get("learning_rate")
        self._batch_size = settings.get("batch_size")
        self._init_scale = settings.get("weight_init_scale")
        self._output_activation = settings.get("output_activation")
        self._prototype_refresh = settings.get("prototype_refresh")
        self._gradient_clip = settings.get("gradient_clip")
        self._divergence_factor = settings.get("divergence_factor")
        self._standardize = settings.get("standardize_inputs")
        self._seed = settings.get("seed")

        self._loss = Prototype_Loss()

    @property
    def layer_dims(self):
        return self._layer_dims

    def initialize(self, random_state):
        """
        Draw initial network parameters uniformly from the configured range
        using the numpy `random_state`.
        """

        scale = self._init_scale
        weights = []
        biases = []
        for inputs, outputs in zip(self._layer_dims[:-1], self._layer_dims[1:]):
            weights.append(random_state.uniform(-scale, scale, size=(outputs, inputs)))
            biases.append(random_state.uniform(-scale, scale, size=outputs))

        return MLP_Parameters(weights, biases, self._output_activation)

    def input_scaling(self, inputs):
        """
        Determine the mean and scale of every column of the training
        `inputs` that the network is trained on.

        Without standardization the mean is zero and the scale one. Constant
        columns keep a scale of one.
        """

        dimension = inputs.shape[1]
        if not self._standardize:
            return np.zeros(dimension), np.ones(dimension)

        scale = inputs.std(axis=0)
        scale[scale <= 0] = 1.0
        return inputs.mean(axis=0), scale

    def _step_size(self, gradients):
        if self._gradient_clip <= 0:
            return self._learning_rate

        # Steps along large gradients are shortened to the clip norm.
        norm = gradients.norm()
        if norm > self._gradient_clip:
            return self._learning_rate * self._gradient_clip / norm

        return self._learning_rate

    def _batch_centers(self, embeddings, indices, epoch_centers):
        # Classes that are absent from the batch keep their epoch center.
        centers = np.array(epoch_centers)
        for grade in Grade:
            members = embeddings[indices == grade.index]
            if members.shape[0] > 0:
                centers[grade.index] = members.mean(axis=0)

        return centers

    def train(self, inputs, labels, seed=None):
        """
        Train the network on the matrix of filled feature vectors `inputs`
        with their `Grade` `labels`.

        The network is trained on standardized inputs if so configured, and
        the returned parameters fold the standardization into the first layer
        so that they take the raw inputs. Training stops with a
        `NumericFailureError` when the epoch loss exceeds the divergence
        bound. The `seed` defaults to the configured seed. Returns the
        trained `MLP_Parameters` and the mean loss of each epoch.
        """

        inputs = np.asarray(inputs, dtype=float)
        if inputs.ndim != 2 or inputs.shape[1] != self._layer_dims[0]:
            raise ValueError("Inputs of shape {} do not match input dimension {}".format(inputs.shape, self._layer_dims[0]))

        indices = Prototype_Set.label_indices(labels)
        if indices.shape[0] != inputs.shape[0]:
            raise ValueError("Expected {} labels, not {}".format(inputs.shape[0], indices.shape[0]))

        counts = np.bincount(indices, minlength=len(Grade))
        for grade in Grade:
            if counts[grade.index] == 0:
                raise InsufficientDataError("Grade '{}' has no labeled samples to train on".format(grade.label))

        mean, scale = self.input_scaling(inputs)
        inputs = (inputs - mean) / scale

        random_state = np.random.RandomState(self._seed if seed is None else seed)
        params = self.initialize(random_state)

        sample_count = inputs.shape[0]
        loss_trace = []
        # The first epoch sets the bound, which is at least a multiple of the
        # loss of equidistant classes.
        loss_bound = None
        for epoch in range(self._epochs):
            epoch_centers = Prototype_Set.compute(params.forward_batch(inputs), labels).centers

            order = random_state.permutation(sample_count)
            total = 0.0
            for start in range(0, sample_count, self._batch_size):
                batch = order[start:start + self._batch_size]
                if self._prototype_refresh == "batch":
                    centers = self._batch_centers(params.forward_batch(inputs[batch]),
                                                  indices[batch], epoch_centers)
                else:
                    centers = epoch_centers

                loss, gradients = self._loss.loss_and_gradients(params, inputs[batch],
                                                                indices[batch], centers)
                params = params.step(gradients, self._step_size(gradients))
                total += loss * batch.shape[0]

            epoch_loss = total / sample_count
            if not np.isfinite(epoch_loss) or not params.is_finite():
                raise NumericFailureError("Embedding training diverged in epoch {}".format(epoch + 1))
            if loss_bound is None:
                loss_bound = self._divergence_factor * max(epoch_loss, np.log(len(Grade)))
            elif epoch_loss > loss_bound:
                raise NumericFailureError("Embedding training diverged in epoch {}: loss {:.6f} exceeds {:.6f}".format(epoch + 1, epoch_loss, loss_bound))

            loss_trace.append(epoch_loss)
            self._logger.debug("Epoch %d: loss %.6f", epoch + 1, epoch_loss)

        if loss_trace:
            self._logger.info("Trained embedding for %d epochs, final loss %.6f",
                              self._epochs, loss_trace[-1])

        return params.with_input_scaling(mean, scale), loss_trace
