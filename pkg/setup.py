from setuptools import setup, find_packages

setup(
    name="topofs",
    version="0.1.0",
    packages=find_packages(include=["topofs", "topofs.*"]),
    install_requires=[
        "numpy>=1.22.0",
        "scipy>=1.9.0",
        "pandas>=1.5.0",
        "scikit-learn>=1.3.0",
        "networkx>=2.8",
        "joblib>=1.2.0",
        "tqdm>=4.60.0",
    ],
    extras_require={
        "test": ["pytest>=7.0", "mpmath>=1.2.0"],
    },
    entry_points={
        "console_scripts": ["tfs=topofs.cli:main"],
    },
    description="Topological feature selection with Triangulated Maximally Filtered Graphs",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Artificial Intelligence",
    ],
    python_requires=">=3.9",
)
