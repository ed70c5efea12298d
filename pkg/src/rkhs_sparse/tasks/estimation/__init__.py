from rkhs_sparse.tasks.estimation.estimator import fit, fit_gram, objective, predict, theoretical_lambda
from rkhs_sparse.tasks.estimation.schema import FittedModel

__all__ = ["FittedModel", "fit", "fit_gram", "objective", "predict", "theoretical_lambda"]
