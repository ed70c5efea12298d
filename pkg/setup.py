from setuptools import setup, find_packages

setup(
    name="rkhs_sparse",
    version="0.1.0",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    install_requires=[
        "joblib",
        "numpy",
        "pandas",
        "pyyaml",
        "scipy",
    ],
    entry_points={
        "console_scripts": ["rkhs-sparse=rkhs_sparse.main:main"],
    },
)
