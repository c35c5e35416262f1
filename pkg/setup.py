from setuptools import setup, find_packages

requirements = [
    "Jinja2<3.2.0",
    "appdirs<1.5.0",
    "numpy<2.1.0",
    "pyparsing<3.2.0",
]

test_requirements = [
    "hypothesis<7.0.0",
    "pytest-coverage",
    "pytest-sugar",
    "pytest<8.3.0",
]

__version__ = '0.1.0'


setup(
    name='lawvere',
    version=__version__,
    packages=find_packages(exclude=["examples", "examples.*"]),
    package_data={
        'lawvere': [
            'instances/data/*.json',
            'instances/templates/*.txt',
            'tests/golden/*.json',
        ],
    },
    keywords="diagonal argument fixed point Cantor Goedel Tarski Kleene recursion theorem",
    description='Diagonal arguments with checkable certificates',
    install_requires=requirements,
    extras_require={'test': test_requirements},
    entry_points={
        'console_scripts': ['lawvere=lawvere:main'],
    },
    python_requires='>=3.8',
    license='MIT',
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Education",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ]
)
