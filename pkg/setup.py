from setuptools import setup, find_packages

setup(
    name="Sociolect",
    version="0.1.0",
    description="Socio-economic author profiling from restaurant reviews",
    author="Amit Nakash",
    author_email="amit.nakash.biz@gmail.com",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    package_data={"sociolect": ["resources/*.txt", "resources/languages/*.txt"]},
    include_package_data=True,
    install_requires=[
        "loguru>=0.6.0,<1.0.0",
        "black>=24.3.0,<25.0.0",
        "pydantic>=1.10.13,<2.0.0",
        "python-dotenv>=1.0.0,<2.0.0",
        "cachetools>=5.3.3,<6.0.0",
        "psutil>=6.1.0,<7.0.0",
        "numpy>=1.26.4,<3.0.0",
        "scipy>=1.12.0,<2.0.0",
        "scikit-learn>=1.4.1,<2.0.0",
        "matplotlib>=3.8.3,<4.0.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.4.2,<8.0.0",
            "pytest-mock>=3.12.0,<4.0.0",
        ],
    },
    entry_points={"console_scripts": ["sociolect=sociolect.cli:main"]},
    python_requires=">=3.10",
    classifiers=[
        "Programming Language :: Python :: 3.12",
        "License :: MIT License",
        "Operating System :: OS Independent",
    ],
)
