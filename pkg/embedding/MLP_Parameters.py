# Core imports
import json

# Library imports
import numpy as np

# Package imports
from ..numerics.Matrix import Matrix

class MLP_Parameters(object):
    """
    Weights and biases of a perceptron with one rectified hidden layer.

    The weight matrix of layer `l` has shape `(layer_dims[l + 1], layer_dims[l])`
    so that a layer maps its input `v` to `W v + b`. The output layer has
    either the identity or a rectifier as activation.
    """

    FORMAT_VERSION = 1
    ACTIVATIONS = ("identity", "relu")

    def __init__(self, weights, biases, output_activation="identity"):
        if len(weights) != len(biases) or len(weights) == 0:
            raise ValueError("Need as many bias vectors as weight matrices")
        if output_activation not in self.ACTIVATIONS:
            raise ValueError("Output activation must be one of {}, not '{}'".format(", ".join(self.ACTIVATIONS), output_activation))

        self._weights = [np.array(weight, dtype=float) for weight in weights]
        self._biases = [np.array(bias, dtype=float) for bias in biases]
        self._output_activation = output_activation

        for index, (weight, bias) in enumerate(zip(self._weights, self._biases)):
            if weight.ndim != 2 or bias.shape != (weight.shape[0],):
                raise ValueError("Layer {} has weights of shape {} and biases of shape {}".format(index, weight.shape, bias.shape))
            if index > 0 and weight.shape[1] != self._weights[index - 1].shape[0]:
                raise ValueError("Layer {} input dimension {} does not match the previous output dimension {}".format(index, weight.shape[1], self._weights[index - 1].shape[0]))

    @property
    def weights(self):
        return self._weights

    @property
    def biases(self):
        return self._biases

    @property
    def output_activation(self):
        return self._output_activation

    @property
    def layer_dims(self):
        return [self._weights[0].shape[1]] + [weight.shape[0] for weight in self._weights]

    def is_finite(self):
        return all(np.all(np.isfinite(array)) for array in self._weights + self._biases)

    def forward_layers(self, inputs):
        """
        Propagate a batch of `inputs` through the network.

        Returns the list of pre-activations and the list of activations of
        each layer, where the first activation is the input itself.
        """

        inputs = np.asarray(inputs, dtype=float)
        if inputs.ndim != 2 or inputs.shape[1] != self.layer_dims[0]:
            raise ValueError("Inputs of shape {} do not match input dimension {}".format(inputs.shape, self.layer_dims[0]))
        if not np.all(np.isfinite(inputs)):
            raise ValueError("Inputs of the network must be finite")

        activations = [inputs]
        pre_activations = []
        last = len(self._weights) - 1
        for index, (weight, bias) in enumerate(zip(self._weights, self._biases)):
            z = np.dot(activations[-1], weight.T) + bias
            pre_activations.append(z)
            if index < last or self._output_activation == "relu":
                activations.append(np.maximum(z, 0.0))
            else:
                activations.append(z)

        return pre_activations, activations

    def forward_batch(self, inputs):
        """
        Embed every row of the `inputs` matrix.
        """

        return self.forward_layers(inputs)[1][-1]

    def forward(self, x):
        """
        Embed a single input vector `x`.
        """

        x = np.asarray(x, dtype=float)
        if x.ndim != 1:
            raise ValueError("Input must be a vector, not of shape {}".format(x.shape))

        return self.forward_batch(x[np.newaxis, :])[0]

    def step(self, gradients, learning_rate):
        """
        Create the parameters after a gradient descent step of size
        `learning_rate` along the `gradients`, which have the same shapes.
        """

        return MLP_Parameters(
            [weight - learning_rate * gradient for weight, gradient in zip(self._weights, gradients.weights)],
            [bias - learning_rate * gradient for bias, gradient in zip(self._biases, gradients.biases)],
            self._output_activation
        )

    def norm(self):
        """
        Calculate the Euclidean norm of all weights and biases together.
        """

        return float(np.sqrt(sum(np.sum(array ** 2) for array in self._weights + self._biases)))

    def with_input_scaling(self, mean, scale):
        """
        Create parameters that take raw inputs `x` to the same embedding as
        these parameters take the standardized inputs `(x - mean) / scale`.
        """

        mean = np.asarray(mean, dtype=float)
        scale = np.asarray(scale, dtype=float)
        dimension = self.layer_dims[0]
        if mean.shape != (dimension,) or scale.shape != (dimension,):
            raise ValueError("Scaling of shapes {} and {} does not match input dimension {}".format(mean.shape, scale.shape, dimension))
        if not np.all(np.isfinite(mean)) or not np.all(np.isfinite(scale)) or np.any(scale <= 0):
            raise ValueError("Scaling must have a finite mean and positive finite scales")

        first = self._weights[0] / scale
        weights = [first] + self._weights[1:]
        biases = [self._biases[0] - np.dot(first, mean)] + self._biases[1:]
        return MLP_Parameters(weights, biases, self._output_activation)

    def to_dict(self):
        return {
            "format_version": self.FORMAT_VERSION,
            "layer_dims": self.layer_dims,
            "hidden_activation": "relu",
            "output_activation": self._output_activation,
            "weights": [Matrix.to_dict(weight) for weight in self._weights],
            "biases": [Matrix.to_dict(bias) for bias in self._biases]
        }

    @classmethod
    def from_dict(cls, data):
        if data.get("format_version") != cls.FORMAT_VERSION:
            raise ValueError("Unsupported network format version {}".format(data.get("format_version")))

        params = cls([Matrix.from_dict(weight) for weight in data["weights"]],
                     [Matrix.from_dict(bias) for bias in data["biases"]],
                     data["output_activation"])
        if params.layer_dims != list(data["layer_dims"]):
            raise ValueError("Network layers {} do not match the stated dimensions {}".format(params.layer_dims, data["layer_dims"]))

        return params

    def save(self, file_name):
        with open(file_name, "w") as params_file:
            json.dump(self.to_dict(), params_file, sort_keys=True)
            params_file.write("\n")

    @classmethod
    def load(cls, file_name):
        with open(file_name) as params_file:
            return cls.from_dict(json.load(params_file))
