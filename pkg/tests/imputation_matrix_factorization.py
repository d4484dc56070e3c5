import time
import numpy as np
from ..core.Errors import InsufficientDataError
from ..imputation.Factor_Pair import Factor_Pair
from ..imputation.Matrix_Factorization import Matrix_Factorization
from ..settings import Arguments
from .settings import SettingsTestCase

class TestImputationMatrixFactorization(SettingsTestCase):
    def setUp(self):
        self.arguments = Arguments("settings.json", [])
        self.settings = self.arguments.get_settings("imputation")
        self.settings.set("factor_rank", 1)
        self.settings.set("factor_lambda", 0.0)
        self.settings.set("factor_iterations", 500)
        self.settings.set("factor_tolerance", 1e-15)

        self.rank_one = np.outer([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])

    def _low_rank(self, m, n, rank, seed):
        random_state = np.random.RandomState(seed)
        return np.dot(random_state.uniform(0, 2, size=(m, rank)),
                      random_state.uniform(0, 2, size=(rank, n)))

    def test_initialization(self):
        with self.assertRaises(TypeError):
            Matrix_Factorization(self.settings)

    def test_factorize_exact(self):
        factorization = Matrix_Factorization(self.arguments)
        mask = np.ones((3, 3), dtype=bool)
        factors = factorization.factorize(self.rank_one, mask)

        self.assertIsInstance(factors, Factor_Pair)
        self.assertEqual(factors.rank, 1)
        self.assertEqual(factors.shape, (3, 3))
        self.assertLess(factors.objective_trace[-1], 1e-8)
        np.testing.assert_allclose(factors.reconstruct(), self.rank_one,
                                   atol=1e-4)

    def test_factorize_hidden_entry(self):
        factorization = Matrix_Factorization(self.arguments)
        mask = np.ones((3, 3), dtype=bool)
        mask[2, 2] = False
        values = self.rank_one.copy()
        values[2, 2] = np.nan

        factors = factorization.factorize(values, mask)
        imputed = factorization.impute(values, mask, factors)
        self.assertAlmostEqual(imputed[2, 2], 9.0, delta=1e-3)

    def test_factorize_trace(self):
        self.settings.set("factor_rank", 3)
        self.settings.set("factor_lambda", 0.1)
        self.settings.set("factor_tolerance", 1e-9)
        values = self._low_rank(30, 18, 3, 1)
        mask = np.random.RandomState(2).rand(30, 18) > 0.3

        factors = Matrix_Factorization(self.arguments).factorize(values, mask)
        trace = factors.objective_trace
        self.assertGreater(len(trace), 2)
        for previous, current in zip(trace[1:], trace[2:]):
            self.assertLessEqual(current, previous + 1e-10)

    def test_factorize_shrinkage(self):
        self.settings.set("factor_rank", 2)
        self.settings.set("factor_lambda", 1e6)
        values = self._low_rank(10, 6, 2, 3)
        factors = Matrix_Factorization(self.arguments).factorize(values, np.ones((10, 6), dtype=bool))
        self.assertLess(np.linalg.norm(factors.U), 1e-2)
        self.assertLess(np.linalg.norm(factors.V), 1e-2)
        self.assertEqual(factors.regularization, 1e6)

    def test_factorize_deterministic(self):
        self.settings.set("factor_rank", 2)
        self.settings.set("factor_lambda", 0.1)
        values = self._low_rank(12, 8, 2, 4)
        mask = np.random.RandomState(5).rand(12, 8) > 0.2

        factorization = Matrix_Factorization(self.arguments)
        first = factorization.factorize(values, mask)
        second = factorization.factorize(values, mask)
        np.testing.assert_array_equal(first.U, second.U)
        np.testing.assert_array_equal(first.V, second.V)

        other = factorization.factorize(values, mask, seed=99)
        self.assertFalse(np.array_equal(first.U, other.U))

    def test_factorize_beats_column_means(self):
        self.settings.set("factor_rank", 2)
        self.settings.set("factor_lambda", 0.1)
        self.settings.set("factor_tolerance", 1e-9)
        factorization = Matrix_Factorization(self.arguments)

        wins = 0
        for seed in range(20):
            values = self._low_rank(40, 18, 2, seed)
            random_state = np.random.RandomState(100 + seed)
            mask = random_state.rand(40, 18) > 0.3
            hidden = ~mask

            factors = factorization.factorize(values, mask, seed=seed)
            imputed = factorization.impute(values, mask, factors)
            error = np.sqrt(np.mean((imputed[hidden] - values[hidden]) ** 2))

            column_means = np.array([values[mask[:, j], j].mean() for j in range(18)])
            filled = np.where(mask, values, column_means)
            baseline = np.sqrt(np.mean((filled[hidden] - values[hidden]) ** 2))
            if error < baseline:
                wins += 1

        self.assertEqual(wins, 20)

    def test_factorize_full_scale(self):
        self.settings.set("factor_rank", 6)
        self.settings.set("factor_lambda", 0.1)
        self.settings.set("factor_iterations", 50)
        self.settings.set("factor_tolerance", 1e-6)
        factorization = Matrix_Factorization(self.arguments)

        start = time.perf_counter()
        wins = 0
        for seed in range(20):
            values = self._low_rank(2250, 18, 6, seed)
            mask = np.random.RandomState(100 + seed).rand(2250, 18) > 0.3
            hidden = ~mask

            factors = factorization.factorize(values, mask, seed=seed)
            trace = np.array(factors.objective_trace)
            self.assertTrue(np.all(np.diff(trace) <= 1e-9 * np.maximum(trace[:-1], 1.0)),
                            msg="Trial {} objective rises".format(seed))

            imputed = factorization.impute(values, mask, factors)
            error = np.sqrt(np.mean((imputed[hidden] - values[hidden]) ** 2))
            column_means = np.array([values[mask[:, j], j].mean() for j in range(18)])
            filled = np.where(mask, values, column_means)
            baseline = np.sqrt(np.mean((filled[hidden] - values[hidden]) ** 2))
            if error < baseline:
                wins += 1

        self.assertGreaterEqual(wins, 18)
        self.assertLess(time.perf_counter() - start, 30.0)

    def test_factorize_invalid(self):
        factorization = Matrix_Factorization(self.arguments)
        with self.assertRaises(InsufficientDataError):
            factorization.factorize(self.rank_one, np.zeros((3, 3), dtype=bool))
        with self.assertRaisesRegex(ValueError, "do not match mask"):
            factorization.factorize(self.rank_one, np.ones((3, 2), dtype=bool))
        with self.assertRaisesRegex(ValueError, "finite"):
            values = self.rank_one.copy()
            values[0, 0] = np.inf
            factorization.factorize(values, np.ones((3, 3), dtype=bool))

        self.settings.set("factor_rank", 4)
        with self.assertRaisesRegex(ValueError, "between 1 and 3, not 4"):
            Matrix_Factorization(self.arguments).factorize(self.rank_one, np.ones((3, 3), dtype=bool))

    def test_factorize_empty_row(self):
        self.settings.set("factor_lambda", 0.1)
        mask = np.ones((3, 3), dtype=bool)
        mask[1] = False
        factorization = Matrix_Factorization(self.arguments)
        with self.assertLogs(Matrix_Factorization.__module__, level="WARNING") as logs:
            factors = factorization.factorize(self.rank_one, mask)

        self.assertIn("1 rows have no observed entries", logs.output[0])
        self.assertTrue(np.all(np.isfinite(factors.reconstruct())))

    def test_objective(self):
        factorization = Matrix_Factorization(self.arguments)
        mask = np.ones((3, 3), dtype=bool)
        mask[0, 2] = False

        zero = Factor_Pair(np.zeros((1, 3)), np.zeros((1, 3)), 0.0)
        self.assertAlmostEqual(factorization.objective(self.rank_one, mask, zero),
                               np.sum(self.rank_one[mask] ** 2))

        exact = Factor_Pair([[1.0, 2.0, 3.0]], [[1.0, 2.0, 3.0]], 0.0)
        self.assertEqual(factorization.objective(self.rank_one, mask, exact), 0.0)

        random_state = np.random.RandomState(6)
        U = random_state.normal(size=(2, 4))
        V = random_state.normal(size=(2, 5))
        values = random_state.normal(size=(4, 5))
        mask = random_state.rand(4, 5) > 0.4
        factors = Factor_Pair(U, V, 0.3)

        expected = 0.0
        for i in range(4):
            for j in range(5):
                if mask[i, j]:
                    expected += (values[i, j] - np.dot(U[:, i], V[:, j])) ** 2

        expected += 0.15 * (np.sum(U ** 2) + np.sum(V ** 2))
        self.assertAlmostEqual(factorization.objective(values, mask, factors), expected)

        with self.assertRaises(ValueError):
            factorization.objective(values[:3], mask[:3], factors)

    def test_impute(self):
        factorization = Matrix_Factorization(self.arguments)
        factors = Factor_Pair([[1.0, 2.0, 3.0]], [[1.0, 2.0, 3.0]], 0.0)

        values = np.arange(9.0).reshape(3, 3)
        mask = np.ones((3, 3), dtype=bool)
        np.testing.assert_array_equal(factorization.impute(values, mask, factors), values)

        # Without observed entries, the reconstruction is returned.
        empty = np.full((3, 3), np.nan)
        np.testing.assert_allclose(factorization.impute(empty, ~mask, factors),
                                   self.rank_one, atol=1e-6)

        with self.assertRaises(ValueError):
            factorization.impute(values[:2], mask[:2], factors)

    def test_impute_codes(self):
        factorization = Matrix_Factorization(self.arguments)
        factors = Factor_Pair([[0.5, 1.0]], [[1.3, -2.0, 9.0]], 0.0)
        values = np.array([[1.0, 0.0, 2.0], [np.nan, np.nan, np.nan]])
        mask = np.array([[True, False, True], [False, False, False]])

        imputed = factorization.impute(values, mask, factors, max_codes=[3, 3, 4])
        # Observed entries are kept verbatim, imputed entries are rounded and
        # clamped to the valid codes of their column.
        np.testing.assert_array_equal(imputed, [[1.0, 0.0, 2.0], [1.0, 0.0, 4.0]])

        with self.assertRaisesRegex(ValueError, "3 maximum codes"):
            factorization.impute(values, mask, factors, max_codes=[3, 3])

    def test_fold_in(self):
        self.settings.set("factor_rank", 2)
        self.settings.set("factor_lambda", 0.1)
        values = self._low_rank(20, 8, 2, 7)
        mask = np.random.RandomState(8).rand(20, 8) > 0.2
        factorization = Matrix_Factorization(self.arguments)
        factors = factorization.factorize(values, mask)

        # Folding in the training rows reproduces their factors.
        folded = factorization.fold_in(values, mask, factors)
        np.testing.assert_allclose(folded.U, factors.U, atol=1e-10)
        np.testing.assert_array_equal(folded.V, factors.V)
        self.assertEqual(folded.regularization, 0.1)

        # Folding in uses the regularization of the trained factors.
        self.settings.set("factor_lambda", 5.0)
        later = Matrix_Factorization(self.arguments).fold_in(values[:3], mask[:3], factors)
        np.testing.assert_allclose(later.U, factors.U[:, :3], atol=1e-10)

        with self.assertRaisesRegex(ValueError, "7 columns"):
            factorization.fold_in(values[:, :7], mask[:, :7], factors)
