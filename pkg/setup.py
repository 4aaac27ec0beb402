from setuptools import setup, find_packages

# All dependencies - matches requirements.txt exactly
install_requires = [
    # Core requirements - Single source of truth for all dependencies
    "colorama>=0.4.6",
    "PyYAML>=6.0.1",
    "tqdm>=4.66.6",
    "jsonschema>=4.19.0",
    "tomli>=2.0.1; python_version < '3.11'",

    # Algebra: Smith normal form, ranks and polynomials
    "sympy>=1.12",

    # Crossing graphs, split detection and planarity checks
    "networkx>=3.0",
]

# Development dependencies
extras_require = {
    'dev': [
        'pytest>=7.4.0',
        'pytest-cov>=4.1.0',
        'black>=23.7.0',
        'isort>=5.12.0',
        'mypy>=1.4.1',
        'flake8>=6.1.0',
    ]
}

setup(
    name="khovanizer",
    version="1.0.0",
    license='GNU GPLv3',
    description="Khovanov homology of tangles and links by delooping and Gaussian elimination",
    packages=find_packages(include=["khovanizer", "khovanizer.*"]),
    package_data={"khovanizer": ["corpus/*"]},
    python_requires='>=3.9',
    install_requires=install_requires,
    extras_require=extras_require,
    entry_points={
        "console_scripts": [
            "khovanizer=khovanizer.main:run",
            "kh=khovanizer.main:run",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Programming Language :: Python :: 3.9",
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
