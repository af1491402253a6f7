#!/usr/bin/env python3
""" Setup.py file """
import os
import subprocess
import setuptools.command.install


# create and install translation files
class InstallWithLocale(setuptools.command.install.install):
    def create_mo_files(self):
        data_files = []
        localedir = 'locale'
        if not os.path.isdir(localedir):
            return data_files
        po_dirs = [localedir + '/' + l + '/LC_MESSAGES/'
                   for l in next(os.walk(localedir))[1]]
        for d in po_dirs:
            mo_dir = os.path.join(self.root or '/', 'usr/share', d)
            os.makedirs(mo_dir, exist_ok=True)
            mo_files = []
            po_files = [f
                        for f in next(os.walk(d))[2]
                        if os.path.splitext(f)[1] == '.po']
            for po_file in po_files:
                filename, _extension = os.path.splitext(po_file)
                mo_file = filename + '.mo'
                subprocess.check_call(
                    ['msgfmt', d + po_file, '-o',
                     os.path.join(mo_dir, mo_file)])
                mo_files.append(d + mo_file)
            data_files.append((d, mo_files))
        return data_files

    def run(self):
        self.create_mo_files()
        super().run()


setuptools.setup(
    name='pebble-games',
    version='0.1',
    description='(k,l)-pebble games: sparsity decisions, components, '
                'circuits and Henneberg sequences for multigraphs',
    license='GPL2+',
    packages=["pebble_games", "pebble_games.game", "pebble_games.analysis",
              "pebble_games.tool", "pebble_games.tests"],
    python_requires='>=3.8',
    install_requires=['numpy'],
    extras_require={
        'test': ['pytest', 'hypothesis', 'networkx', 'coverage'],
    },
    entry_points={
        'console_scripts': [
            'pebble-games = pebble_games.tool.pebble_tool:main',
        ]
    },
    cmdclass={
        'install': InstallWithLocale
    },
)
