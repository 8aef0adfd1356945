from setuptools import setup, find_packages

setup(
    name="postspec",
    version="1.0.0",
    packages=find_packages(exclude=["tests", "tests.*", "features", "features.*"]),
    package_data={
        "config": ["*.yaml", "environments/*.yaml"],
        "core.models.schemas": ["*.json"],
    },
    install_requires=[
        "numpy>=1.26,<3",
        "scipy>=1.11",
        "pandas>=2.1",
        "pydantic>=2.5,<3",
        "pyyaml>=6.0",
        "python-dotenv>=1.0",
        "colorlog>=6.8",
        "jsonschema>=4.20",
    ],
    entry_points={
        "console_scripts": [
            "postspec=runners.cli_runner:main",
        ],
    },
    python_requires=">=3.9",
    author="Rohit Kumar",
    description="Post-specialisation of word vector spaces: ATTRACT-REPEL, learned mappings for unseen words, evaluation",
)
