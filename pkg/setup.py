from setuptools import setup, find_packages

setup(
    name="bourbakikit",
    version="1.0.0",
    description="Bourbaki sequences and ideals of Koszul cycles, with the Rees algebra of the Z_{n-2} ideal",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        "fastapi>=0.100.0",
        "uvicorn>=0.23.0",
        "pydantic>=2.0.0",
        "python-dotenv>=1.0.0",
        "numpy>=1.24.0",
    ],
    python_requires=">=3.8",
    entry_points={
        "console_scripts": [
            "bourbakikit=cli.main:main",
        ],
    },
)
