from rkhs_sparse.datasets.csv_loader import Dataset, load_csv, write_csv

__all__ = ["Dataset", "load_csv", "write_csv"]
