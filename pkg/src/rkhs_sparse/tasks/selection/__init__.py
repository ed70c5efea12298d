from rkhs_sparse.tasks.selection.schema import ActiveSet, GradientScores
from rkhs_sparse.tasks.selection.selector import gradient_scores, select

__all__ = ["ActiveSet", "GradientScores", "gradient_scores", "select"]
