from setuptools import setup, find_packages

setup(

    name='slq',
    version='0.1-dev',
    description='Decision procedure and proof checker for quantifier-free separation logic',

    packages=find_packages(exclude=['build*', 'tests*']),
    package_data={'slq.hilbert': ['derivations/*.yml', 'derivations/*.proof']},

    license='BSD-3',

    install_requires=[
        'lark',
        'pyyaml',
    ],

    entry_points={
        'console_scripts': '''

            slq = slq.commands.main:main

        ''',
    },

    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],

)
