# Library imports
import numpy as np
from scipy.special import logsumexp

# Package imports
from .MLP_Parameters import MLP_Parameters

class Prototype_Loss(object):
    """
    Cross-entropy loss of labeled embeddings under the softmax over negative
    Euclidean distances to the class prototypes.

    The prototypes are constants of the loss, so gradients only flow through
    the network.
    """

    def distances(self, embeddings, centers):
        """
        Calculate the Euclidean distance of every embedding to every center.
        """

        difference = embeddings[:, np.newaxis, :] - centers[np.newaxis, :, :]
        return np.sqrt(np.sum(difference ** 2, axis=2))

    def loss(self, params, inputs, labels, centers):
        """
        Calculate the mean loss of the batch of `inputs` with their class
        index `labels` against the `centers`.
        """

        return self.loss_and_gradients(params, inputs, labels, centers)[0]

    def loss_and_gradients(self, params, inputs, labels, centers):
        """
        Calculate the mean loss of the batch and its gradients with respect to
        the network parameters `params`.

        The `labels` are class indices into the rows of `centers`. Returns the
        loss and an `MLP_Parameters` object with the gradients.
        """

        inputs = np.asarray(inputs, dtype=float)
        labels = np.asarray(labels, dtype=int)
        centers = np.asarray(centers, dtype=float)
        if inputs.ndim != 2 or inputs.shape[0] == 0:
            raise ValueError("Loss needs a nonempty batch of inputs")
        if labels.shape != (inputs.shape[0],):
            raise ValueError("Expected {} labels, not {}".format(inputs.shape[0], labels.shape))
        if not np.all(np.isfinite(centers)):
            raise ValueError("Prototypes must be finite")

        batch_size = inputs.shape[0]
        pre_activations, activations = params.forward_layers(inputs)
        embeddings = activations[-1]

        distances = self.distances(embeddings, centers)
        logits = -distances
        log_probs = logits - logsumexp(logits, axis=1, keepdims=True)
        rows = np.arange(batch_size)
        loss = -np.mean(log_probs[rows, labels])

        # Gradient of the loss with respect to the logits, then to the
        # embeddings through the distances. A zero distance has no gradient.
        probs = np.exp(log_probs)
        logit_gradient = probs
        logit_gradient[rows, labels] -= 1.0
        logit_gradient /= batch_size

        safe = np.where(distances > 0, distances, 1.0)
        scale = np.where(distances > 0, -logit_gradient / safe, 0.0)
        difference = embeddings[:, np.newaxis, :] - centers[np.newaxis, :, :]
        delta = np.sum(scale[:, :, np.newaxis] * difference, axis=1)

        weight_gradients = [None] * len(params.weights)
        bias_gradients = [None] * len(params.biases)
        last = len(params.weights) - 1
        for index in range(last, -1, -1):
            if index < last or params.output_activation == "relu":
                delta = delta * (pre_activations[index] > 0)

            weight_gradients[index] = np.dot(delta.T, activations[index])
            bias_gradients[index] = delta.sum(axis=0)
            if index > 0:
                delta = np.dot(delta, params.weights[index])

        gradients = MLP_Parameters(weight_gradients, bias_gradients,
                                   params.output_activation)
        return float(loss), gradients
